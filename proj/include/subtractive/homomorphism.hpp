#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "subtractive/semiring.hpp"

namespace subtractive {

/// A semiring homomorphism between two finite semirings.
class Homomorphism {
 public:
  /// Checks every homomorphism equation; throws InvalidHomomorphism.
  Homomorphism(FiniteSemiring source, FiniteSemiring target, std::vector<Element> map);

  const FiniteSemiring& source() const { return source_; }
  const FiniteSemiring& target() const { return target_; }
  std::span<const Element> map() const { return map_; }
  Element operator()(Element x) const { return map_[x]; }

  bool is_surjective() const;
  ElementSet image(ElementSet xs) const;
  ElementSet preimage(ElementSet ys) const;
  ElementSet kernel() const { return preimage(ElementSet::singleton(target_.zero())); }

  std::string render() const;

 private:
  FiniteSemiring source_;
  FiniteSemiring target_;
  std::vector<Element> map_;
};

/// First failed homomorphism equation for a candidate map, if any.
std::optional<std::string> homomorphism_violation(const FiniteSemiring& source,
                                                  const FiniteSemiring& target,
                                                  std::span<const Element> map);

/// All homomorphisms source -> target in lexicographic order of the map.
std::vector<Homomorphism> enumerate_homomorphisms(const FiniteSemiring& source,
                                                  const FiniteSemiring& target);

}  // namespace subtractive
