#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "subtractive/semiring.hpp"

namespace subtractive {

/// An ideal of a finite semiring: contains zero, closed under + and under
/// multiplication by arbitrary ring elements.
class Ideal {
 public:
  /// Throws InvalidIdeal if `members` is not an ideal of `parent`.
  static Ideal from_members(FiniteSemiring parent, ElementSet members);

  const FiniteSemiring& parent() const { return parent_; }
  ElementSet members() const { return members_; }
  bool contains(Element e) const { return members_.contains(e); }
  std::size_t size() const { return members_.size(); }
  bool is_subset_of(const Ideal& other) const { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Ideal& a, const Ideal& b) {
    return a.members_ == b.members_ && a.parent_ == b.parent_;
  }

 private:
  Ideal(FiniteSemiring parent, ElementSet members) : parent_(std::move(parent)), members_(members) {}

  FiniteSemiring parent_;
  ElementSet members_;

  friend Ideal generate_ideal(const FiniteSemiring&, ElementSet);
  friend Ideal subtractive_closure(const Ideal&);
  friend Ideal ideal_intersection(std::span<const Ideal>);
  friend Ideal radical(const Ideal&);
};

bool is_ideal(const FiniteSemiring& s, ElementSet members);

/// Smallest ideal containing `seed` (fixpoint of + and r·(-) closure).
Ideal generate_ideal(const FiniteSemiring& s, ElementSet seed);

/// {r | r + x ∈ I for some x ∈ I}.
Ideal subtractive_closure(const Ideal& ideal);

/// A pair (x, y) with x ∈ I, x + y ∈ I and y ∉ I, if one exists.
std::optional<std::pair<Element, Element>> subtractivity_witness(const Ideal& ideal);

/// I == C(I). Cross-checked against the definitional test; a disagreement
/// throws std::logic_error.
bool is_subtractive(const Ideal& ideal);

Ideal ideal_sum(const Ideal& a, const Ideal& b);
/// The ideal generated by all pairwise products.
Ideal ideal_product(const Ideal& a, const Ideal& b);
Ideal ideal_intersection(std::span<const Ideal> ideals);
/// {r | r^k ∈ I for some k >= 1}.
Ideal radical(const Ideal& ideal);

/// "{0,T}" with labels in declared element order.
std::string render_elements(const FiniteSemiring& s, ElementSet members);
std::string render_ideal(const Ideal& ideal);

/// Accepts "0,T", "{0,T}" or "{}"; throws InvalidParam on unknown labels.
ElementSet parse_element_labels(const FiniteSemiring& s, std::string_view text);

struct IdealLimits {
  std::size_t max_order = kMaxOrder;
  std::size_t max_ideals = 4096;
};

/// Idl(S) in canonical order together with the subtractive sub-family.
class IdealLattice {
 public:
  const FiniteSemiring& semiring() const { return semiring_; }
  std::size_t size() const { return ideals_.size(); }
  const Ideal& operator[](std::size_t i) const { return ideals_[i]; }
  std::span<const Ideal> ideals() const { return ideals_; }

  bool is_subtractive(std::size_t i) const { return subtractive_[i]; }
  const std::vector<bool>& subtractive_mask() const { return subtractive_; }
  std::vector<std::size_t> subtractive_indices() const;
  /// Index of C(I) for the ideal at index i.
  std::size_t closure_index(std::size_t i) const { return closure_[i]; }

  std::optional<std::size_t> index_of(ElementSet members) const;
  std::size_t zero_index() const { return 0; }
  std::size_t whole_index() const { return ideals_.size() - 1; }

 private:
  IdealLattice(FiniteSemiring s, std::vector<Ideal> ideals);

  FiniteSemiring semiring_;
  std::vector<Ideal> ideals_;
  std::vector<bool> subtractive_;
  std::vector<std::size_t> closure_;
  std::unordered_map<std::uint64_t, std::size_t> index_;

  friend IdealLattice enumerate_ideals(const FiniteSemiring&, IdealLimits);
};

/// Every ideal of S, via breadth-first joins of principal ideals.
/// Throws CapExceeded when the order or the ideal count exceeds the limits.
IdealLattice enumerate_ideals(const FiniteSemiring& s, IdealLimits limits = {});

struct GaloisVerdict {
  bool holds = true;
  /// (ideal index, subtractive ideal index) where C(I) ⊆ K and I ⊆ K disagree.
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

/// C(I) ⊆ K ⟺ I ⊆ K for every ideal I and every subtractive K.
GaloisVerdict check_galois(const IdealLattice& lattice);

struct ModularityVerdict {
  bool holds = true;
  /// Lattice indices (a, b, c) with a ⊆ c and a ∨ (b ∧ c) != (a ∨ b) ∧ c.
  std::optional<std::array<std::size_t, 3>> witness;
};

/// Modular law over Idl(S), or over Idl_sub(S) with join C(I + J).
ModularityVerdict is_modular(const IdealLattice& lattice, bool restrict_to_subtractive);

/// Lattice join used by is_modular: I + J, or C(I + J) in the subtractive sublattice.
Ideal lattice_join(const Ideal& a, const Ideal& b, bool subtractive);

}  // namespace subtractive
