#include "subtractive/semiring.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

namespace subtractive {

AxiomViolation::AxiomViolation(std::vector<AxiomFailure> failures)
    : Error([&] {
        std::ostringstream os;
        os << "semiring axioms violated:";
        for (const auto& f : failures) {
          os << ' ' << f.axiom << '(';
          for (std::size_t i = 0; i < f.witness.size(); ++i) os << (i ? "," : "") << f.witness[i];
          os << ')';
        }
        return os.str();
      }()),
      failures_(std::move(failures)) {}

bool AxiomViolation::violates(const std::string& axiom) const {
  return std::any_of(failures_.begin(), failures_.end(),
                     [&](const AxiomFailure& f) { return f.axiom == axiom; });
}

ParseError::ParseError(std::size_t line, const std::string& message)
    : Error("line " + std::to_string(line) + ": " + message), line_(line) {}

CapExceeded::CapExceeded(const std::string& what, std::size_t count, std::size_t cap)
    : Error(what + " exceeds cap (" + std::to_string(count) + " > " + std::to_string(cap) + ")"),
      count_(count),
      cap_(cap) {}

std::optional<Element> FiniteSemiring::find_label(std::string_view label) const {
  const auto& ls = data_->labels;
  auto it = std::find(ls.begin(), ls.end(), label);
  if (it == ls.end()) return std::nullopt;
  return static_cast<Element>(it - ls.begin());
}

SemiringTables FiniteSemiring::tables() const {
  SemiringTables t;
  t.name = data_->name;
  t.labels = data_->labels;
  const std::size_t n = data_->order;
  t.add.assign(n, std::vector<Element>(n));
  t.mul.assign(n, std::vector<Element>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.add[i][j] = data_->add[i * n + j];
      t.mul[i][j] = data_->mul[i * n + j];
    }
  t.zero = data_->zero;
  t.one = data_->one;
  return t;
}

bool operator==(const FiniteSemiring& a, const FiniteSemiring& b) {
  if (a.data_ == b.data_) return true;
  const auto& x = *a.data_;
  const auto& y = *b.data_;
  return x.order == y.order && x.zero == y.zero && x.one == y.one && x.add == y.add &&
         x.mul == y.mul && x.labels == y.labels && x.name == y.name;
}

void check_shape(const SemiringTables& c) {
  const std::size_t n = c.labels.size();
  if (n == 0) throw ShapeError("semiring needs at least one element");
  if (n > kMaxOrder) throw ShapeError("order " + std::to_string(n) + " exceeds maximum 64");
  std::set<std::string> seen;
  for (const auto& l : c.labels) {
    if (l.empty()) throw ShapeError("empty element label");
    if (!seen.insert(l).second) throw ShapeError("duplicate element label '" + l + "'");
  }
  auto check_table = [&](const std::vector<std::vector<Element>>& t, const char* which) {
    if (t.size() != n) throw ShapeError(std::string(which) + " table must have " + std::to_string(n) + " rows");
    for (const auto& row : t) {
      if (row.size() != n)
        throw ShapeError(std::string(which) + " table rows must have " + std::to_string(n) + " entries");
      for (Element e : row)
        if (e >= n) throw ShapeError(std::string(which) + " table entry out of range");
    }
  };
  check_table(c.add, "add");
  check_table(c.mul, "mul");
  if (c.zero >= n || c.one >= n) throw ShapeError("distinguished element out of range");
}

std::vector<AxiomFailure> axiom_failures(const SemiringTables& c) {
  check_shape(c);
  const auto n = static_cast<Element>(c.labels.size());
  const auto& A = c.add;
  const auto& M = c.mul;
  std::vector<AxiomFailure> out;

  auto first_pair = [&](const char* axiom, auto&& ok) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        if (!ok(x, y)) {
          out.push_back({axiom, {x, y}});
          return;
        }
  };
  auto first_single = [&](const char* axiom, auto&& ok) {
    for (Element x = 0; x < n; ++x)
      if (!ok(x)) {
        out.push_back({axiom, {x}});
        return;
      }
  };
  auto first_triple = [&](const char* axiom, auto&& ok) {
    for (Element x = 0; x < n; ++x)
      for (Element y = 0; y < n; ++y)
        for (Element z = 0; z < n; ++z)
          if (!ok(x, y, z)) {
            out.push_back({axiom, {x, y, z}});
            return;
          }
  };

  first_pair("add-commutativity", [&](Element x, Element y) { return A[x][y] == A[y][x]; });
  first_triple("add-associativity",
               [&](Element x, Element y, Element z) { return A[A[x][y]][z] == A[x][A[y][z]]; });
  first_single("add-identity", [&](Element x) { return A[c.zero][x] == x && A[x][c.zero] == x; });
  first_pair("mul-commutativity", [&](Element x, Element y) { return M[x][y] == M[y][x]; });
  first_triple("mul-associativity",
               [&](Element x, Element y, Element z) { return M[M[x][y]][z] == M[x][M[y][z]]; });
  first_single("mul-identity", [&](Element x) { return M[c.one][x] == x && M[x][c.one] == x; });
  first_single("absorption", [&](Element x) { return M[c.zero][x] == c.zero && M[x][c.zero] == c.zero; });
  first_triple("distributivity", [&](Element x, Element y, Element z) {
    return M[x][A[y][z]] == A[M[x][y]][M[x][z]] && M[A[y][z]][x] == A[M[y][x]][M[z][x]];
  });
  return out;
}

FiniteSemiring validate_semiring(SemiringTables c) {
  auto failures = axiom_failures(c);
  if (!failures.empty()) throw AxiomViolation(std::move(failures));
  FiniteSemiring::Data d;
  d.name = std::move(c.name);
  d.order = c.labels.size();
  d.labels = std::move(c.labels);
  d.add.reserve(d.order * d.order);
  d.mul.reserve(d.order * d.order);
  for (const auto& row : c.add) d.add.insert(d.add.end(), row.begin(), row.end());
  for (const auto& row : c.mul) d.mul.insert(d.mul.end(), row.begin(), row.end());
  d.zero = c.zero;
  d.one = c.one;
  return FiniteSemiring(std::make_shared<const FiniteSemiring::Data>(std::move(d)));
}

namespace {

SemiringTables from_ops(std::string name, std::vector<std::string> labels, Element zero, Element one,
                        auto&& add, auto&& mul) {
  SemiringTables t;
  t.name = std::move(name);
  const auto n = static_cast<Element>(labels.size());
  t.labels = std::move(labels);
  t.add.assign(n, std::vector<Element>(n));
  t.mul.assign(n, std::vector<Element>(n));
  for (Element i = 0; i < n; ++i)
    for (Element j = 0; j < n; ++j) {
      t.add[i][j] = add(i, j);
      t.mul[i][j] = mul(i, j);
    }
  t.zero = zero;
  t.one = one;
  return t;
}

void require_param(std::optional<unsigned> p, std::string_view family) {
  if (!p) throw InvalidParam(std::string(family) + " needs a parameter");
}

}  // namespace

FiniteSemiring boolean_semiring() {
  return validate_semiring(from_ops(
      "B", {"0", "1"}, 0, 1, [](Element x, Element y) { return x | y; },
      [](Element x, Element y) { return x & y; }));
}

FiniteSemiring truncated_nat(unsigned k) {
  if (k < 1 || k + 1 > kMaxOrder) throw InvalidParam("truncated_nat needs 1 <= k <= 63");
  std::vector<std::string> labels;
  for (unsigned i = 0; i < k; ++i) labels.push_back(std::to_string(i));
  labels.emplace_back("T");
  auto cap = [k](unsigned long v) { return static_cast<Element>(std::min<unsigned long>(v, k)); };
  return validate_semiring(from_ops(
      "S" + std::to_string(k + 1), std::move(labels), 0, 1,
      [&](Element x, Element y) { return cap(static_cast<unsigned long>(x) + y); },
      [&](Element x, Element y) { return cap(static_cast<unsigned long>(x) * y); }));
}

FiniteSemiring zmod(unsigned n) {
  if (n < 1 || n > kMaxOrder) throw InvalidParam("zmod needs 1 <= n <= 64");
  std::vector<std::string> labels;
  for (unsigned i = 0; i < n; ++i) labels.push_back(std::to_string(i));
  return validate_semiring(from_ops(
      "Z" + std::to_string(n), std::move(labels), 0, n == 1 ? 0 : 1,
      [n](Element x, Element y) { return (x + y) % n; }, [n](Element x, Element y) { return (x * y) % n; }));
}

FiniteSemiring chain_minplus(unsigned k) {
  if (k < 2 || k > kMaxOrder) throw InvalidParam("chain_minplus needs 2 <= k <= 64");
  // index 0 is inf, index v+1 is the value v
  std::vector<std::string> labels{"inf"};
  for (unsigned v = 0; v + 1 < k; ++v) labels.push_back(std::to_string(v));
  const Element inf = 0;
  return validate_semiring(from_ops(
      "M" + std::to_string(k), std::move(labels), inf, 1,
      [&](Element x, Element y) {
        if (x == inf) return y;
        if (y == inf) return x;
        return std::min(x, y);
      },
      [&](Element x, Element y) {
        if (x == inf || y == inf) return inf;
        const unsigned sum = (x - 1) + (y - 1);
        return sum + 1 >= k ? inf : static_cast<Element>(sum + 1);
      }));
}

FiniteSemiring builtin(std::string_view family, std::optional<unsigned> param) {
  if (family == "boolean") return boolean_semiring();
  if (family == "truncated_nat") {
    require_param(param, family);
    return truncated_nat(*param);
  }
  if (family == "zmod") {
    require_param(param, family);
    return zmod(*param);
  }
  if (family == "chain_minplus") {
    require_param(param, family);
    return chain_minplus(*param);
  }
  throw UnknownFamily("unknown semiring family '" + std::string(family) + "'");
}

FiniteSemiring builtin_from_spec(std::string_view spec) {
  auto sep = spec.find_first_of(":(");
  if (sep == std::string_view::npos) return builtin(spec);
  std::string_view family = spec.substr(0, sep);
  std::string_view rest = spec.substr(sep + 1);
  if (spec[sep] == '(') {
    if (rest.empty() || rest.back() != ')') throw InvalidParam("malformed builtin '" + std::string(spec) + "'");
    rest.remove_suffix(1);
  }
  unsigned value = 0;
  auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
  if (ec != std::errc{} || ptr != rest.data() + rest.size())
    throw InvalidParam("malformed builtin parameter '" + std::string(rest) + "'");
  return builtin(family, value);
}

}  // namespace subtractive
