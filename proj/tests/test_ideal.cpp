#include <doctest.h>

#include "oracles.hpp"
#include "subtractive/search.hpp"

using namespace subtractive;

namespace {

std::vector<FiniteSemiring> corpus() {
  auto c = standard_corpus(3).structures;
  for (const auto& s : search_semirings(4, true).structures) c.push_back(s);
  return c;
}

Ideal ideal(const FiniteSemiring& s, const char* labels) {
  return Ideal::from_members(s, parse_element_labels(s, labels));
}

}  // namespace

TEST_CASE("generate_ideal examples") {
  const auto b = boolean_semiring();
  const auto s3 = truncated_nat(2);
  CHECK(render_ideal(generate_ideal(b, {})) == "{0}");
  CHECK(render_ideal(generate_ideal(s3, parse_element_labels(s3, "T"))) == "{0,T}");
  CHECK(generate_ideal(s3, parse_element_labels(s3, "1")).members() == s3.all());
  CHECK_THROWS_AS(Ideal::from_members(s3, parse_element_labels(s3, "1")), InvalidIdeal);
}

TEST_CASE("enumerate_ideals examples") {
  const auto l_b = enumerate_ideals(boolean_semiring());
  CHECK(l_b.size() == 2);
  const auto s3 = truncated_nat(2);
  const auto l3 = enumerate_ideals(s3);
  REQUIRE(l3.size() == 3);
  CHECK(render_ideal(l3[0]) == "{0}");
  CHECK(render_ideal(l3[1]) == "{0,T}");
  CHECK(render_ideal(l3[2]) == "{0,1,T}");
  CHECK(l3.subtractive_mask() == std::vector<bool>{true, false, true});

  const auto s4 = truncated_nat(3);
  const auto l4 = enumerate_ideals(s4);
  for (const char* m : {"0", "0,T", "0,2,T", "0,1,2,T"}) CHECK(l4.index_of(parse_element_labels(s4, m)));
}

TEST_CASE("enumerate_ideals equals the power-set filter") {
  for (const auto& s : corpus()) {
    INFO(s.name());
    const auto l = enumerate_ideals(s);
    auto brute = oracle::ideals(s);
    std::sort(brute.begin(), brute.end(),
              [](auto a, auto b) { return canonical_less(ElementSet(a), ElementSet(b)); });
    REQUIRE(l.size() == brute.size());
    for (std::size_t i = 0; i < l.size(); ++i) CHECK(l[i].members().bits() == brute[i]);
  }
}

TEST_CASE("ideal cap") {
  IdealLimits tight;
  tight.max_ideals = 2;
  CHECK_THROWS_AS(enumerate_ideals(truncated_nat(3), tight), CapExceeded);
  tight = {};
  tight.max_order = 2;
  CHECK_THROWS_AS(enumerate_ideals(truncated_nat(2), tight), CapExceeded);
}

TEST_CASE("subtractive closure examples") {
  const auto s3 = truncated_nat(2);
  CHECK(render_ideal(subtractive_closure(ideal(s3, "0"))) == "{0}");
  CHECK(render_ideal(subtractive_closure(ideal(s3, "0,T"))) == "{0,1,T}");
  const auto w = subtractivity_witness(ideal(s3, "0,T"));
  REQUIRE(w);
  CHECK(s3.label(w->first) == "T");
  CHECK(s3.label(w->second) == "1");
  CHECK(is_subtractive(ideal(s3, "0")));
  CHECK_FALSE(is_subtractive(ideal(s3, "0,T")));
}

TEST_CASE("closure agrees with the definitional and least-superset oracles") {
  for (const auto& s : corpus()) {
    INFO(s.name());
    for (auto bits : oracle::ideals(s)) {
      const Ideal i = Ideal::from_members(s, ElementSet(bits));
      const Ideal c = subtractive_closure(i);
      CHECK(c.members().bits() == oracle::closure(s, bits));
      CHECK(c.members().bits() == oracle::least_subtractive_superset(s, bits));
      CHECK(is_subtractive(i) == oracle::is_subtractive(s, bits));
      CHECK(subtractivity_witness(i).has_value() == !oracle::is_subtractive(s, bits));
    }
  }
}

TEST_CASE("sum, product, intersection") {
  const auto s4 = truncated_nat(3);
  const auto s3 = truncated_nat(2);
  const auto b = boolean_semiring();
  CHECK(render_ideal(ideal_sum(ideal(s4, "0,T"), ideal(s4, "0,2,T"))) == "{0,2,T}");
  CHECK(ideal_sum(ideal(s4, "0"), ideal(s4, "0,2,T")) == ideal(s4, "0,2,T"));
  CHECK(render_ideal(ideal_product(ideal(s3, "0,T"), ideal(s3, "0,T"))) == "{0,T}");
  CHECK(ideal_product(ideal(b, "0,1"), ideal(b, "0,1")) == ideal(b, "0,1"));
  CHECK(ideal_product(ideal(s4, "0"), ideal(s4, "0,2,T")) == ideal(s4, "0"));
  const Ideal pair[] = {ideal(s4, "0,T"), ideal(s4, "0,2,T")};
  CHECK(render_ideal(ideal_intersection(pair)) == "{0,T}");
  CHECK_THROWS_AS(ideal_intersection({}), EmptyFamily);
  CHECK_THROWS_AS(ideal_sum(ideal(s4, "0"), ideal(s3, "0")), ParentMismatch);
  const Ideal mixed[] = {ideal(s4, "0"), ideal(s3, "0")};
  CHECK_THROWS_AS(ideal_intersection(mixed), ParentMismatch);
}

TEST_CASE("product and sum against the generated-ideal oracle") {
  for (const auto& s : corpus()) {
    INFO(s.name());
    const auto all = oracle::ideals(s);
    for (auto a : all)
      for (auto b : all) {
        std::uint64_t sums = 0, prods = 0;
        for (Element x = 0; x < s.order(); ++x)
          for (Element y = 0; y < s.order(); ++y)
            if (((a >> x) & 1U) && ((b >> y) & 1U)) {
              sums |= std::uint64_t{1} << s.add(x, y);
              prods |= std::uint64_t{1} << s.mul(x, y);
            }
        // least ideal containing the seed, from the power set
        auto least = [&](std::uint64_t seed) {
          std::uint64_t best = ~std::uint64_t{0};
          for (auto i : all)
            if ((seed & ~i) == 0 && (i & ~best) == 0) best = i;
          return best;
        };
        const Ideal ia = Ideal::from_members(s, ElementSet(a));
        const Ideal ib = Ideal::from_members(s, ElementSet(b));
        CHECK(ideal_sum(ia, ib).members().bits() == least(sums));
        CHECK(ideal_product(ia, ib).members().bits() == least(prods));
        CHECK((ideal_product(ia, ib).members().bits() & ~(a & b)) == 0);
      }
  }
}

TEST_CASE("radical") {
  const auto s4 = truncated_nat(3);
  CHECK(radical(ideal(s4, "0,T")).contains(2));
  CHECK(radical(generate_ideal(s4, s4.all())).members() == s4.all());
  CHECK(render_ideal(radical(ideal(zmod(2), "0"))) == "{0}");
  for (const auto& s : corpus())
    for (auto bits : oracle::ideals(s)) {
      std::uint64_t expected = 0;
      for (Element r = 0; r < s.order(); ++r) {
        Element p = r;
        for (std::size_t k = 0; k <= s.order(); ++k, p = s.mul(p, r))
          if ((bits >> p) & 1U) expected |= std::uint64_t{1} << r;
      }
      CHECK(radical(Ideal::from_members(s, ElementSet(bits))).members().bits() == expected);
    }
}

TEST_CASE("galois and modularity examples") {
  CHECK(check_galois(enumerate_ideals(boolean_semiring())).holds);
  CHECK(check_galois(enumerate_ideals(truncated_nat(2))).holds);
  CHECK(is_modular(enumerate_ideals(boolean_semiring()), true).holds);
  CHECK(is_modular(enumerate_ideals(truncated_nat(2)), true).holds);
}

TEST_CASE("modularity agrees with a direct triple check") {
  for (const auto& s : corpus()) {
    INFO(s.name());
    const auto l = enumerate_ideals(s);
    bool modular = true;
    const auto sub = l.subtractive_indices();
    auto join = [&](std::size_t a, std::size_t b) {
      return oracle::closure(s, ideal_sum(l[a], l[b]).members().bits());
    };
    for (auto a : sub)
      for (auto b : sub)
        for (auto c : sub) {
          if (!l[a].is_subset_of(l[c])) continue;
          const auto bc = *l.index_of(l[b].members() & l[c].members());
          const auto lhs = join(a, bc);
          const auto rhs = join(a, b) & l[c].members().bits();
          if (lhs != rhs) modular = false;
        }
    CHECK(is_modular(l, true).holds == modular);
  }
}

TEST_CASE("element label parsing") {
  const auto s3 = truncated_nat(2);
  CHECK(parse_element_labels(s3, "{0,T}") == ElementSet(0b101));
  CHECK(parse_element_labels(s3, " 0 , T ") == ElementSet(0b101));
  CHECK(parse_element_labels(s3, "{}") == ElementSet());
  CHECK_THROWS_AS(parse_element_labels(s3, "0,X"), InvalidParam);
  CHECK_THROWS_AS(parse_element_labels(s3, "0,"), InvalidParam);
}
