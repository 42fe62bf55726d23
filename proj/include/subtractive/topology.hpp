#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_set>
#include <utility>
#include <vector>

#include "subtractive/homomorphism.hpp"
#include "subtractive/ideal.hpp"
#include "subtractive/point_set.hpp"

namespace subtractive {

/// How the subbasic closed set named by an ideal I is read as a set of points.
enum class Semantics {
  /// {J : J ⊆ C(I)}
  DownSet,
  /// {J : J = C(I)}
  FixedPoint,
};

inline constexpr Semantics kAllSemantics[] = {Semantics::DownSet, Semantics::FixedPoint};

std::string_view to_string(Semantics s);
/// Accepts "downset" and "fixedpoint".
std::optional<Semantics> parse_semantics(std::string_view text);

struct TopologyLimits {
  std::size_t max_points = 4096;
  std::size_t max_closed = 100000;
};

/// Idl(S) with the topology generated by the closure-derived subbasis.
class SubtractiveSpace {
 public:
  const IdealLattice& lattice() const { return *lattice_; }
  Semantics semantics() const { return semantics_; }
  std::size_t point_count() const { return lattice_->size(); }
  PointSet all_points() const { return PointSet::full(point_count()); }

  /// Deduplicated subbasic sets, in order of first appearance by ideal index.
  std::span<const PointSet> subbasis() const { return subbasis_; }
  /// Which subbasic set the ideal at index i names.
  std::size_t subbasis_index(std::size_t ideal) const { return named_[ideal]; }

  /// Intersection of all subbasic sets containing p (the whole space if none).
  const PointSet& point_closure(std::size_t p) const { return closures_[p]; }

  /// A set is closed iff it contains the closure of each of its points.
  /// Exact in a finite space, where closed sets are closed under all unions.
  bool is_closed(const PointSet& s) const;

  PointSet subtractive_points() const;

 private:
  SubtractiveSpace(std::shared_ptr<const IdealLattice> lattice, Semantics semantics);

  std::shared_ptr<const IdealLattice> lattice_;
  Semantics semantics_;
  std::vector<PointSet> subbasis_;
  std::vector<std::size_t> named_;
  std::vector<PointSet> closures_;

  friend SubtractiveSpace build_space(const IdealLattice&, Semantics, TopologyLimits);
};

SubtractiveSpace build_space(const IdealLattice& lattice, Semantics semantics, TopologyLimits limits = {});

/// Every closed set of a space, materialized.
class ClosedFamily {
 public:
  /// Sorted by canonical_less; the first entry is ∅, the last the whole space.
  std::span<const PointSet> sets() const { return sets_; }
  std::size_t size() const { return sets_.size(); }
  bool contains(const PointSet& s) const { return lookup_.contains(s); }
  /// Smallest member containing p, found by scanning the family.
  const PointSet& minimal_superset(std::size_t p) const;

 private:
  explicit ClosedFamily(std::vector<PointSet> sets);

  std::vector<PointSet> sets_;
  std::unordered_set<PointSet, PointSetHash> lookup_;

  friend ClosedFamily closed_family(const SubtractiveSpace&, std::size_t);
};

/// Least family holding the subbasis, ∅ and the whole space, closed under
/// binary ∪ and ∩. Throws CapExceeded when it grows beyond `cap`.
ClosedFamily closed_family(const SubtractiveSpace& space, std::size_t cap = 100000);

/// Intersection of the subbasic sets that contain p; recomputed from the subbasis.
PointSet point_closure(const SubtractiveSpace& space, std::size_t p);

struct T0Verdict {
  bool holds = true;
  std::optional<std::pair<std::size_t, std::size_t>> witness;
};

T0Verdict is_T0(const SubtractiveSpace& space);

struct T1Verdict {
  bool holds = true;
  /// A point of the subspace whose singleton is not closed there.
  std::optional<std::size_t> witness;
  /// For each point q outside the subspace: does adding q keep it T1?
  std::vector<std::pair<std::size_t, bool>> extensions;

  bool maximal() const {
    for (const auto& [q, ok] : extensions)
      if (ok) return false;
    return true;
  }
};

T1Verdict is_T1_subspace(const SubtractiveSpace& space, const PointSet& points);

struct ClosedSet {
  PointSet members;
  std::optional<bool> irreducible;
  std::optional<std::vector<std::size_t>> generic_points;
  /// Two proper closed subsets covering a reducible set.
  std::optional<std::pair<PointSet, PointSet>> cover;
};

/// Reducible iff D is the union of two closed sets, both proper subsets of D.
/// Decided over the materialized family; returns the cover when reducible.
std::optional<std::pair<PointSet, PointSet>> reducible_cover(const ClosedFamily& family, const PointSet& d);
bool is_irreducible(const ClosedFamily& family, const PointSet& d);

/// Every nonempty closed set, flagged for irreducibility, with generic points.
std::vector<ClosedSet> irreducible_closed_sets(const SubtractiveSpace& space, const ClosedFamily& family);

/// All p ∈ D with cl{p} = D.
std::vector<std::size_t> generic_points(const SubtractiveSpace& space, const PointSet& d);

/// φ_!: Idl(S') -> Idl(S), J ↦ φ⁻¹(J), with continuity checked three ways.
struct InducedMap {
  /// point_map[j] = index in Idl(S) of φ⁻¹(ideal j of S').
  std::vector<std::size_t> point_map;
  /// φ⁻¹(J) subtractive whenever J is, and ker φ subtractive.
  bool preserves_subtractive = true;
  std::optional<std::size_t> preserves_witness;
  /// Preimage of every member of the closed family of Idl(S) is closed.
  bool continuous = true;
  std::optional<PointSet> continuity_witness;
  /// Preimage of every subbasic set is closed.
  bool continuous_on_subbasis = true;
  /// Monotone with respect to closures: φ_!(cl{p}) ⊆ cl{φ_!(p)}.
  bool continuous_by_closures = true;
};

/// `source_space` is a space on Idl(S), `target_space` on Idl(S'). The closed
/// family of source_space is used for the definitional check when provided.
InducedMap induced_map(const Homomorphism& phi, const SubtractiveSpace& source_space,
                       const SubtractiveSpace& target_space, const ClosedFamily* source_family = nullptr);

/// Convenience overload building both lattices and spaces.
InducedMap induced_map(const Homomorphism& phi, Semantics semantics);

struct HomeomorphismVerdict {
  bool injective = true;
  bool into_subtractive = true;
  bool surjective = true;
  bool continuous = true;
  bool closed = true;
  std::vector<std::string> witnesses;

  bool holds() const { return injective && into_subtractive && surjective && continuous && closed; }
};

/// φ_! restricted to Idl_sub(S') -> Idl_sub(S), each subspace carrying the
/// topology induced from its ambient space.
HomeomorphismVerdict is_homeomorphism_on_subtractive(const Homomorphism& phi, const SubtractiveSpace& source_space,
                                                     const SubtractiveSpace& target_space,
                                                     const ClosedFamily& source_family,
                                                     const ClosedFamily& target_family);

HomeomorphismVerdict is_homeomorphism_on_subtractive(const Homomorphism& phi, Semantics semantics);

std::string render_points(const PointSet& s);

}  // namespace subtractive
