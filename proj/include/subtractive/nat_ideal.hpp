#pragma once

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subtractive {

using Natural = std::uint64_t;

/// A finitely generated ideal of the semiring (ℕ, +, ·, 0, 1).
///
/// Ideals of ℕ are exactly the additive submonoids, so the member set is
/// every ℕ-linear combination of the generators. The representation is
/// eventually periodic: below bound() membership is read from a window,
/// from bound() on a value is a member iff divisor() divides it. The zero
/// ideal has divisor 0 and no members beyond 0.
///
/// Generators are kept as the unique minimal generating set, so two values
/// are equal iff they denote the same set.
class NatIdeal {
 public:
  NatIdeal() : NatIdeal(std::vector<Natural>{}) {}
  explicit NatIdeal(std::vector<Natural> generators);

  std::span<const Natural> generators() const { return generators_; }
  Natural divisor() const { return divisor_; }
  Natural bound() const { return bound_; }
  /// Smallest c with every multiple of divisor() at or above c a member.
  Natural conductor() const { return conductor_; }

  bool contains(Natural m) const;
  bool is_zero() const { return generators_.empty(); }
  /// Members below bound() that are multiples of divisor() but missing.
  std::vector<Natural> gaps() const;

  /// "<2,3> = {0,2,3,4,...} (cofinite, missing {1})"
  std::string render() const;

  friend bool operator==(const NatIdeal& a, const NatIdeal& b) { return a.generators_ == b.generators_; }

 private:
  std::vector<Natural> generators_;
  Natural divisor_ = 0;
  Natural bound_ = 1;
  Natural conductor_ = 0;
  std::vector<bool> window_;
};

/// Largest generator accepted; bounds the window to about 16.8M entries.
inline constexpr Natural kMaxNatGenerator = 4096;

NatIdeal nat_ideal(std::vector<Natural> generators);

/// Minimal generators of the submonoid given by a membership predicate that
/// is eventually "divisible by d" from `bound` on.
template <class Pred>
NatIdeal nat_ideal_from_membership(Pred&& member, Natural divisor, Natural bound);

bool nat_subset(const NatIdeal& a, const NatIdeal& b);
NatIdeal nat_sum(const NatIdeal& a, const NatIdeal& b);
NatIdeal nat_product(const NatIdeal& a, const NatIdeal& b);
NatIdeal nat_intersection(std::span<const NatIdeal> ideals);
NatIdeal nat_subtractive_closure(const NatIdeal& ideal);
NatIdeal nat_radical(const NatIdeal& ideal);

/// (x, y) with x ∈ I, x + y ∈ I, y ∉ I, searched with y then x ascending.
std::optional<std::pair<Natural, Natural>> nat_subtractivity_witness(const NatIdeal& ideal);
bool nat_is_subtractive(const NatIdeal& ideal);

/// Parses "2,3" (empty string is the zero ideal).
NatIdeal parse_nat_ideal(std::string_view text);

// -- implementation -------------------------------------------------------

template <class Pred>
NatIdeal nat_ideal_from_membership(Pred&& member, Natural divisor, Natural bound) {
  if (divisor == 0) return NatIdeal();
  Natural smallest = 0;
  for (Natural m = divisor; smallest == 0 && m <= std::max(bound, divisor) + divisor; m += divisor)
    if (member(m)) smallest = m;
  if (smallest == 0) throw std::logic_error("membership predicate has no member at its divisor");
  // a member m >= bound + smallest decomposes as (m - smallest) + smallest
  const Natural limit = std::max(bound, divisor) + smallest;
  std::vector<bool> in(limit, false);
  for (Natural m = 0; m < limit; ++m) in[m] = member(m);
  std::vector<Natural> gens;
  for (Natural m = 1; m < limit; ++m) {
    if (!in[m]) continue;
    bool decomposes = false;
    for (Natural g : gens)
      if (in[m - g]) {
        decomposes = true;
        break;
      }
    if (!decomposes) gens.push_back(m);
  }
  return NatIdeal(std::move(gens));
}

}  // namespace subtractive
