#pragma once

#include <chrono>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subtractive/ideal.hpp"
#include "subtractive/search.hpp"
#include "subtractive/topology.hpp"

namespace subtractive {

enum class ClaimScope { PerIdeal, PerPair, PerFamily, PerLattice, PerSpace, PerHomomorphism, Internal };

enum class ClaimPolicy {
  /// A failure means the workbench itself is unsound; fails the exit code.
  MustHold,
  /// Reported either way; never fails the exit code.
  VerifyOrRefute,
};

struct Claim {
  std::string_view id;
  /// The statement that is checked, in mathematical shorthand.
  std::string_view statement;
  /// The result the statement comes from.
  std::string_view anchor;
  ClaimScope scope;
  bool semantics_dependent;
  ClaimPolicy policy;
  bool on_finite;
  bool on_natural;
};

/// The claims C1.1 .. C15, in report order.
std::span<const Claim> claim_registry();
/// Cross-checks between independent computation routes (X1 ..).
std::span<const Claim> internal_checks();
/// Looks up a claim or internal check by id.
const Claim* find_claim(std::string_view id);

enum class Outcome { Holds, Fails, Cap };

std::string_view to_string(Outcome o);

struct ClaimReport {
  std::string claim_id;
  std::string structure;
  std::optional<Semantics> semantics;
  Outcome result = Outcome::Holds;
  /// Present for fails and cap; a single line.
  std::string witness;
  std::chrono::microseconds elapsed{0};

  /// (corpus index, claim order, partner index, semantics) for deterministic ordering.
  std::size_t corpus_index = 0;
  std::size_t claim_order = 0;
  std::size_t partner_index = 0;
};

/// CLAIM <id> STRUCT <name> SEM <downset|fixedpoint|na> RESULT <holds|fails|cap> [WITNESS <w>]
std::string render_report_line(const ClaimReport& r);

struct CheckLimits {
  IdealLimits ideals;
  TopologyLimits topology;
  std::chrono::milliseconds budget{10000};
};

/// Name of the structure under which ℕ-backend claims are reported.
inline constexpr std::string_view kNaturalStructure = "N";

/// Runs one claim on one finite semiring (semantics required iff dependent).
ClaimReport run_claim(const Claim& claim, const FiniteSemiring& s, std::optional<Semantics> semantics,
                      const CheckLimits& limits = {});

/// Runs a per-homomorphism claim over every homomorphism source -> target.
/// Returns nullopt when no homomorphism (or, for C15, no surjective one) exists.
std::optional<ClaimReport> run_homomorphism_claim(const Claim& claim, const FiniteSemiring& source,
                                                  const FiniteSemiring& target, std::optional<Semantics> semantics,
                                                  const CheckLimits& limits = {});

/// Runs an ideal-level claim on the ℕ backend's fixed family of ideals.
ClaimReport run_natural_claim(const Claim& claim);

struct SuiteOptions {
  /// Claim or internal-check ids; empty selects everything.
  std::vector<std::string> claims;
  std::vector<Semantics> semantics{Semantics::DownSet, Semantics::FixedPoint};
  bool include_natural = false;
  bool include_internal = true;
  CheckLimits limits;
  unsigned jobs = 1;
};

struct Report {
  std::vector<ClaimReport> entries;
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t caps = 0;
  std::size_t must_hold_failures = 0;

  /// 0 success, 1 must-hold failure, 3 cap exceeded when strict.
  int exit_code(bool strict) const;
  /// Report lines followed by a "# summary" line.
  std::string render() const;
};

Report run_suite(const Corpus& corpus, const SuiteOptions& options);

}  // namespace subtractive
