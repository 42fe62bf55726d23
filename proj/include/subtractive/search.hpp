#pragma once

#include <optional>
#include <vector>

#include "subtractive/semiring.hpp"

namespace subtractive {

/// A list of finite semirings to run claims over.
struct Corpus {
  std::vector<FiniteSemiring> structures;
  std::size_t max_order = 0;
  bool canonical_only = false;
  std::optional<std::size_t> limit;
  /// The search stopped at `limit`; the list is partial.
  bool limit_reached = false;
};

/// Largest order accepted by search_semirings.
inline constexpr std::size_t kMaxSearchOrder = 6;

/// Every commutative semiring on `order` labelled elements with zero = 0 and
/// one = 1 (a single structure for order 1), by backtracking over the upper
/// triangles of both tables with axiom pruning. With `canonical`, keeps only
/// the lexicographically least table pair of each isomorphism class.
Corpus search_semirings(std::size_t order, bool canonical, std::optional<std::size_t> limit = std::nullopt);

/// Relabels by a permutation of element indices; zero and one follow.
SemiringTables permute(const SemiringTables& t, const std::vector<Element>& perm);

/// Lexicographically least (add, mul) pair over relabelings preserving zero and one.
SemiringTables canonical_form(const FiniteSemiring& s);

bool isomorphic(const FiniteSemiring& a, const FiniteSemiring& b);

/// Built-ins plus canonical searches of orders 1..max_order.
Corpus standard_corpus(std::size_t max_order = 3);

}  // namespace subtractive
