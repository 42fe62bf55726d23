#include <doctest.h>

#include <random>

#include "oracles.hpp"

using namespace subtractive;

namespace {

std::vector<std::vector<Natural>> generator_sets() {
  std::vector<std::vector<Natural>> out = {{}, {1}, {2}, {3}, {2, 3}, {4, 6}, {6, 10, 15}, {5, 7}, {12, 18, 8}, {9}};
  std::mt19937 rng(20261014);
  std::uniform_int_distribution<Natural> gen(1, 30);
  std::uniform_int_distribution<int> count(1, 4);
  for (int t = 0; t < 40; ++t) {
    std::vector<Natural> g;
    for (int k = count(rng); k > 0; --k) g.push_back(gen(rng));
    out.push_back(g);
  }
  return out;
}

bool member(const std::vector<bool>& in, Natural m) { return m < in.size() && in[m]; }

}  // namespace

TEST_CASE("representation examples") {
  CHECK(nat_ideal({2}).render() == "<2> = {0,2,4,...} (multiples of 2)");
  CHECK(nat_ideal({2, 3}).render() == "<2,3> = {0,2,3,4,...} (cofinite, missing {1})");
  CHECK(nat_ideal({}).render() == "<> = {0}");
  CHECK(nat_ideal({1}).render() == "<1> = {0,1,2,...} (all of N)");
  CHECK(nat_ideal({4, 6, 8, 0}) == nat_ideal({4, 6}));
  CHECK(parse_nat_ideal("2,3") == nat_ideal({2, 3}));
  CHECK(parse_nat_ideal("") == nat_ideal({}));
  CHECK_THROWS(parse_nat_ideal("2,x"));
}

TEST_CASE("membership matches the dynamic-programming oracle up to 10 B") {
  for (const auto& g : generator_sets()) {
    const auto i = nat_ideal(g);
    const Natural limit = 10 * std::max<Natural>(i.bound(), 1);
    const auto in = oracle::nat_members(g, limit);
    for (Natural m = 0; m <= limit; ++m) REQUIRE_MESSAGE(i.contains(m) == in[m], "m=" << m << " " << i.render());
  }
}

TEST_CASE("sum is the ideal generated by both generator sets") {
  const auto two = nat_ideal({2});
  const auto three = nat_ideal({3});
  const auto sum = nat_sum(two, three);
  CHECK(sum == nat_ideal({2, 3}));
  CHECK_FALSE(sum.contains(1));
  for (Natural m = 2; m <= 100; ++m) CHECK(sum.contains(m));
  CHECK(nat_sum(two, nat_ideal({})) == two);
  CHECK(nat_sum(two, two) == two);
}

TEST_CASE("closure matches a window-bounded definitional oracle") {
  for (const auto& g : generator_sets()) {
    const auto i = nat_ideal(g);
    const Natural window = 4 * std::max<Natural>(i.bound(), 1) + 64;
    const auto in = oracle::nat_members(g, 3 * window);
    const auto c = nat_subtractive_closure(i);
    for (Natural r = 0; r < window; ++r) {
      bool expected = false;
      for (Natural x = 0; x < window && !expected; ++x) expected = member(in, x) && member(in, r + x);
      REQUIRE_MESSAGE(c.contains(r) == expected, "r=" << r << " I=" << i.render());
    }
    // subtractive iff fixed by the closure, cross-checked against the definition
    bool definitional = true;
    for (Natural x = 0; x < window && definitional; ++x)
      for (Natural y = 0; y < window && definitional; ++y)
        if (member(in, x) && member(in, x + y) && !member(in, y)) definitional = false;
    CHECK(nat_is_subtractive(i) == definitional);
  }
}

TEST_CASE("the sum counterexample") {
  CHECK(nat_is_subtractive(nat_ideal({2})));
  CHECK(nat_is_subtractive(nat_ideal({3})));
  CHECK(nat_is_subtractive(nat_ideal({})));
  const auto sum = nat_sum(nat_ideal({2}), nat_ideal({3}));
  CHECK(nat_subtractive_closure(sum) == nat_ideal({1}));
  const auto w = nat_subtractivity_witness(sum);
  REQUIRE(w);
  CHECK(w->first == 2);
  CHECK(w->second == 1);
}

TEST_CASE("product, intersection, radical") {
  CHECK(nat_product(nat_ideal({2}), nat_ideal({3})) == nat_ideal({6}));
  CHECK(nat_product(nat_ideal({2, 3}), nat_ideal({2})) == nat_ideal({4, 6}));
  const NatIdeal pair[] = {nat_ideal({2}), nat_ideal({3})};
  CHECK(nat_intersection(pair) == nat_ideal({6}));
  const NatIdeal pair2[] = {nat_ideal({2, 3}), nat_ideal({2})};
  CHECK(nat_intersection(pair2) == nat_ideal({2}));
  CHECK(nat_radical(nat_ideal({4})) == nat_ideal({2}));
  CHECK(nat_radical(nat_ideal({12})) == nat_ideal({6}));
  CHECK(nat_radical(nat_ideal({})) == nat_ideal({}));

  for (const auto& a : generator_sets())
    for (const auto& b : {std::vector<Natural>{2}, std::vector<Natural>{3, 5}, std::vector<Natural>{4, 6}}) {
      const auto ia = nat_ideal(a), ib = nat_ideal(b);
      const NatIdeal two[] = {ia, ib};
      const auto meet = nat_intersection(two);
      const auto prod = nat_product(ia, ib);
      for (Natural m = 0; m < 400; ++m) {
        CHECK(meet.contains(m) == (ia.contains(m) && ib.contains(m)));
        if (prod.contains(m)) CHECK(meet.contains(m));
      }
      CHECK(nat_subset(prod, meet));
    }
  for (const auto& g : generator_sets()) {
    const auto i = nat_ideal(g);
    const auto r = nat_radical(i);
    for (Natural m = 0; m < 200; ++m) {
      // m^k in I for some k <= 64; exact powers while small, residues mod d beyond any bound
      bool expected = false;
      Natural exact = 1, residue = 1;
      const Natural d = std::max<Natural>(i.divisor(), 1);
      bool small = true;
      for (int k = 1; k <= 64 && !expected; ++k) {
        residue = residue * m % d;
        if (small && exact > (Natural{1} << 40) / std::max<Natural>(m, 1)) small = false;
        if (small) exact *= m;
        expected = small ? i.contains(exact) : !i.is_zero() && residue == 0;
      }
      CHECK_MESSAGE(r.contains(m) == expected, "m=" << m << " I=" << i.render());
    }
  }
}

TEST_CASE("generator cap") { CHECK_THROWS_AS(nat_ideal({kMaxNatGenerator + 1}), InvalidParam); }
