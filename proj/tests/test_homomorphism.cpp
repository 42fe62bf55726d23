#include <doctest.h>

#include "oracles.hpp"
#include "subtractive/search.hpp"

using namespace subtractive;

TEST_CASE("homomorphism examples") {
  const auto b = boolean_semiring();
  const auto s3 = truncated_nat(2);
  const auto s4 = truncated_nat(3);

  const auto bb = enumerate_homomorphisms(b, b);
  REQUIRE(bb.size() == 1);
  CHECK(std::vector<Element>(bb[0].map().begin(), bb[0].map().end()) == std::vector<Element>{0, 1});

  CHECK(enumerate_homomorphisms(b, s3).empty());

  bool found = false;
  for (const auto& h : enumerate_homomorphisms(s4, s3))
    if (std::vector<Element>(h.map().begin(), h.map().end()) == std::vector<Element>{0, 1, 2, 2}) {
      found = true;
      CHECK(h.is_surjective());
      CHECK(h.render() == "[0->0,1->1,2->T,T->T]");
    }
  CHECK(found);
}

TEST_CASE("enumerate_homomorphisms matches the brute-force map oracle") {
  const auto corpus = standard_corpus(3).structures;
  for (const auto& a : corpus)
    for (const auto& b : corpus) {
      INFO(a.name() << " -> " << b.name());
      std::vector<std::vector<Element>> got;
      for (const auto& h : enumerate_homomorphisms(a, b)) got.emplace_back(h.map().begin(), h.map().end());
      CHECK(got == oracle::homomorphisms(a, b));
    }
}

TEST_CASE("a non-homomorphism is rejected") {
  const auto s3 = truncated_nat(2);
  CHECK_THROWS_AS(Homomorphism(s3, s3, {0, 1, 1}), InvalidHomomorphism);
  CHECK_THROWS_AS(Homomorphism(s3, s3, {0, 1}), InvalidHomomorphism);
  CHECK(homomorphism_violation(s3, s3, std::vector<Element>{0, 1, 2}) == std::nullopt);
}

TEST_CASE("kernel and preimage") {
  const auto s4 = truncated_nat(3);
  const auto s3 = truncated_nat(2);
  const Homomorphism pi(s4, s3, {0, 1, 2, 2});
  CHECK(pi.kernel() == ElementSet::singleton(0));
  CHECK(pi.preimage(ElementSet(0b101)) == ElementSet(0b1101));
  CHECK(pi.image(s4.all()) == s3.all());
}
