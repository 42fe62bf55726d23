#include <doctest.h>

#include "oracles.hpp"
#include "subtractive/search.hpp"

using namespace subtractive;

namespace {

constexpr const char* kS3Text = R"(# three-element truncation of N
semiring S3
elements 0 1 T
zero 0
one 1
add
0 1 T
1 T T
T T T
mul
0 0 0
0 1 T
0 T T
)";

std::string replace(std::string text, const std::string& from, const std::string& to) {
  text.replace(text.find(from), from.size(), to);
  return text;
}

}  // namespace

TEST_CASE("builtins are valid semirings") {
  for (const auto& s : standard_corpus(3).structures) {
    INFO(s.name());
    CHECK(oracle::is_semiring(s.tables()));
  }
  CHECK(boolean_semiring().order() == 2);
  CHECK(boolean_semiring().add(1, 1) == 1);
  CHECK(zmod(2).add(1, 1) == 0);
  CHECK(truncated_nat(2).name() == "S3");
  CHECK(truncated_nat(2).order() == 3);
  CHECK(truncated_nat(3).name() == "S4");
  CHECK(chain_minplus(4).order() == 4);
}

TEST_CASE("truncated_nat is the quotient of N identifying every n >= k") {
  for (unsigned k = 1; k <= 5; ++k) {
    const auto s = truncated_nat(k);
    auto cls = [&](unsigned n) { return static_cast<Element>(std::min(n, k)); };
    for (unsigned a = 0; a <= k + 3; ++a)
      for (unsigned b = 0; b <= k + 3; ++b) {
        CHECK(s.add(cls(a), cls(b)) == cls(a + b));
        CHECK(s.mul(cls(a), cls(b)) == cls(a * b));
      }
  }
}

TEST_CASE("chain_minplus uses min and capped addition") {
  const auto m = chain_minplus(4);
  const auto inf = *m.find_label("inf");
  const auto zero = *m.find_label("0");
  const auto one = *m.find_label("1");
  const auto two = *m.find_label("2");
  CHECK(m.zero() == inf);
  CHECK(m.one() == zero);
  CHECK(m.add(one, two) == one);
  CHECK(m.mul(one, one) == two);
  CHECK(m.mul(one, two) == inf);
  CHECK(m.mul(inf, one) == inf);
}

TEST_CASE("builtin lookup") {
  CHECK(builtin("boolean") == boolean_semiring());
  CHECK(builtin("truncated_nat", 2) == truncated_nat(2));
  CHECK(builtin_from_spec("zmod:4") == zmod(4));
  CHECK(builtin_from_spec("zmod(4)") == zmod(4));
  CHECK_THROWS_AS(builtin("quaternions"), UnknownFamily);
  CHECK_THROWS_AS(builtin("zmod", 0), InvalidParam);
  CHECK_THROWS_AS(builtin("zmod"), InvalidParam);
}

TEST_CASE("parse the documented format") {
  const auto s = parse_semiring(kS3Text);
  CHECK(s.order() == 3);
  CHECK(s.name() == "S3");
  CHECK(s.label(2) == "T");
  CHECK(s == truncated_nat(2));
}

TEST_CASE("parse errors") {
  SUBCASE("missing one") {
    const std::string text = replace(kS3Text, "one 1\n", "");
    CHECK_THROWS_AS(parse_semiring(text), ParseError);
  }
  SUBCASE("unknown label reports its line") {
    const std::string text = replace(kS3Text, "1 T T\nT T T\nmul", "1 T X\nT T T\nmul");
    try {
      parse_semiring(text);
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 8);
    }
  }
  SUBCASE("short row") {
    const std::string text = replace(kS3Text, "0 T T\n", "0 T\n");
    CHECK_THROWS_AS(parse_semiring(text), ParseError);
  }
  SUBCASE("two blocks where one is expected") {
    CHECK_THROWS_AS(parse_semiring(std::string(kS3Text) + kS3Text), ParseError);
    CHECK(parse_semirings(std::string(kS3Text) + kS3Text).size() == 2);
  }
}

TEST_CASE("non-symmetric add table is an add-commutativity violation") {
  const std::string text = replace(kS3Text, "add\n0 1 T\n1 T T", "add\n0 1 T\n1 T 1");
  try {
    parse_semiring(text);
    FAIL("expected AxiomViolation");
  } catch (const AxiomViolation& e) {
    CHECK(e.violates("add-commutativity"));
  }
}

TEST_CASE("validation reports every violated axiom") {
  SemiringTables t = truncated_nat(2).tables();
  t.add[1][2] = 1;  // breaks commutativity
  t.mul[0][1] = 1;  // breaks absorption and commutativity
  t.mul[1][0] = 1;
  const auto fails = axiom_failures(t);
  std::vector<std::string> names;
  for (const auto& f : fails) names.push_back(f.axiom);
  CHECK(std::find(names.begin(), names.end(), "add-commutativity") != names.end());
  CHECK(std::find(names.begin(), names.end(), "absorption") != names.end());
  CHECK(fails.size() >= 3);

  SemiringTables bad_shape = t;
  bad_shape.mul.pop_back();
  CHECK_THROWS_AS(validate_semiring(bad_shape), ShapeError);
  bad_shape = t;
  bad_shape.add[0][0] = 7;
  CHECK_THROWS_AS(validate_semiring(bad_shape), ShapeError);
}

TEST_CASE("order-1 semiring is accepted") {
  SemiringTables t{"one", {"0"}, {{0}}, {{0}}, 0, 0};
  CHECK(validate_semiring(t).order() == 1);
}

TEST_CASE("validate agrees with the axiom oracle on every order-2 candidate") {
  for (unsigned bits = 0; bits < 256; ++bits) {
    SemiringTables t{"c", {"0", "1"}, {{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}, 0, 1};
    for (int k = 0; k < 4; ++k) {
      t.add[k / 2][k % 2] = (bits >> k) & 1U;
      t.mul[k / 2][k % 2] = (bits >> (k + 4)) & 1U;
    }
    CHECK(axiom_failures(t).empty() == oracle::is_semiring(t));
  }
}

TEST_CASE("parse(render(S)) = S") {
  auto corpus = standard_corpus(3).structures;
  const auto four = search_semirings(4, true).structures;
  corpus.insert(corpus.end(), four.begin(), four.end());
  for (const auto& s : corpus) {
    INFO(s.name());
    const std::string text = render_semiring(s);
    const auto back = parse_semiring(text);
    CHECK(back == s);
    CHECK(render_semiring(back) == text);
  }
}
