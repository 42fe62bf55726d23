#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "subtractive/semiring.hpp"

namespace subtractive {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    std::istringstream is{std::string(raw)};
    Line line{number, {}};
    for (std::string tok; is >> tok;) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = end + 1;
  }
  return lines;
}

class BlockParser {
 public:
  BlockParser(const std::vector<Line>& lines, std::size_t& cursor) : lines_(lines), cursor_(cursor) {}

  FiniteSemiring parse() {
    const Line& head = lines_[cursor_];
    if (head.tokens[0] != "semiring" || head.tokens.size() != 2)
      throw ParseError(head.number, "expected 'semiring <name>'");
    t_.name = head.tokens[1];
    const std::size_t head_line = head.number;
    ++cursor_;
    std::optional<std::pair<std::size_t, std::string>> zero, one;
    bool have_elements = false, have_add = false, have_mul = false;
    while (cursor_ < lines_.size() && lines_[cursor_].tokens[0] != "semiring") {
      const Line& l = lines_[cursor_];
      const std::string& key = l.tokens[0];
      if (key == "elements") {
        if (have_elements) throw ParseError(l.number, "duplicate 'elements' line");
        if (l.tokens.size() < 2) throw ParseError(l.number, "'elements' needs at least one label");
        t_.labels.assign(l.tokens.begin() + 1, l.tokens.end());
        have_elements = true;
        ++cursor_;
      } else if (key == "zero" || key == "one") {
        auto& slot = key == "zero" ? zero : one;
        if (slot) throw ParseError(l.number, "duplicate '" + key + "' line");
        if (l.tokens.size() != 2) throw ParseError(l.number, "expected '" + key + " <label>'");
        slot.emplace(l.number, l.tokens[1]);
        ++cursor_;
      } else if (key == "add" || key == "mul") {
        bool& have = key == "add" ? have_add : have_mul;
        if (have) throw ParseError(l.number, "duplicate '" + key + "' table");
        if (!have_elements) throw ParseError(l.number, "'elements' must precede the tables");
        if (l.tokens.size() != 1) throw ParseError(l.number, "table header takes no arguments");
        ++cursor_;
        read_table(key == "add" ? t_.add : t_.mul, key, l.number);
        have = true;
      } else {
        throw ParseError(l.number, "unknown directive '" + key + "'");
      }
    }
    if (!have_elements) throw ParseError(head_line, "missing 'elements' line");
    if (!zero) throw ParseError(head_line, "missing 'zero' line");
    if (!one) throw ParseError(head_line, "missing 'one' line");
    if (!have_add) throw ParseError(head_line, "missing 'add' table");
    if (!have_mul) throw ParseError(head_line, "missing 'mul' table");
    t_.zero = resolve(zero->second, zero->first);
    t_.one = resolve(one->second, one->first);
    try {
      check_shape(t_);
    } catch (const ShapeError& e) {
      throw ParseError(head_line, e.what());
    }
    return validate_semiring(std::move(t_));
  }

 private:
  Element resolve(const std::string& label, std::size_t line) const {
    for (std::size_t i = 0; i < t_.labels.size(); ++i)
      if (t_.labels[i] == label) return static_cast<Element>(i);
    throw ParseError(line, "unknown element label '" + label + "'");
  }

  void read_table(std::vector<std::vector<Element>>& table, const std::string& which, std::size_t header_line) {
    const std::size_t n = t_.labels.size();
    table.clear();
    for (std::size_t r = 0; r < n; ++r) {
      if (cursor_ >= lines_.size())
        throw ParseError(header_line, which + " table needs " + std::to_string(n) + " rows");
      const Line& l = lines_[cursor_];
      if (l.tokens.size() != n)
        throw ParseError(l.number, which + " row must have " + std::to_string(n) + " entries");
      std::vector<Element> row;
      for (const auto& tok : l.tokens) row.push_back(resolve(tok, l.number));
      table.push_back(std::move(row));
      ++cursor_;
    }
  }

  const std::vector<Line>& lines_;
  std::size_t& cursor_;
  SemiringTables t_;
};

}  // namespace

std::vector<FiniteSemiring> parse_semirings(std::string_view text) {
  const auto lines = tokenize(text);
  std::vector<FiniteSemiring> out;
  std::size_t cursor = 0;
  while (cursor < lines.size()) out.push_back(BlockParser(lines, cursor).parse());
  return out;
}

FiniteSemiring parse_semiring(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "empty input");
  std::size_t cursor = 0;
  auto s = BlockParser(lines, cursor).parse();
  if (cursor < lines.size()) throw ParseError(lines[cursor].number, "more than one semiring in input");
  return s;
}

std::string render_semiring(const FiniteSemiring& s) {
  std::ostringstream os;
  const auto n = static_cast<Element>(s.order());
  os << "semiring " << s.name() << "\nelements";
  for (const auto& l : s.labels()) os << ' ' << l;
  os << "\nzero " << s.label(s.zero()) << "\none " << s.label(s.one()) << '\n';
  auto table = [&](const char* header, auto&& op) {
    os << header << '\n';
    for (Element i = 0; i < n; ++i) {
      for (Element j = 0; j < n; ++j) os << (j ? " " : "") << s.label(op(i, j));
      os << '\n';
    }
  };
  table("add", [&](Element i, Element j) { return s.add(i, j); });
  table("mul", [&](Element i, Element j) { return s.mul(i, j); });
  return os.str();
}

}  // namespace subtractive
