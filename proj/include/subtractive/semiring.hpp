#pragma once

#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subtractive/element_set.hpp"
#include "subtractive/errors.hpp"

namespace subtractive {

/// Unvalidated description of a finite semiring: labels plus row-major tables.
struct SemiringTables {
  std::string name;
  std::vector<std::string> labels;
  std::vector<std::vector<Element>> add;
  std::vector<std::vector<Element>> mul;
  Element zero = 0;
  Element one = 0;

  bool operator==(const SemiringTables&) const = default;
};

/// A validated finite commutative semiring.
///
/// Instances are immutable handles onto shared table storage, so copies are
/// cheap and can be passed freely between threads. Elements are the dense
/// indices 0..order()-1; labels are presentation only.
class FiniteSemiring {
 public:
  const std::string& name() const { return data_->name; }
  std::size_t order() const { return data_->order; }
  std::span<const std::string> labels() const { return data_->labels; }
  const std::string& label(Element e) const { return data_->labels[e]; }
  std::optional<Element> find_label(std::string_view label) const;

  Element add(Element x, Element y) const { return data_->add[x * data_->order + y]; }
  Element mul(Element x, Element y) const { return data_->mul[x * data_->order + y]; }
  Element zero() const { return data_->zero; }
  Element one() const { return data_->one; }
  ElementSet all() const { return ElementSet::full(order()); }

  SemiringTables tables() const;

  /// Structural equality of tables, distinguished elements and labels.
  friend bool operator==(const FiniteSemiring& a, const FiniteSemiring& b);

 private:
  struct Data {
    std::string name;
    std::size_t order = 0;
    std::vector<std::string> labels;
    std::vector<Element> add;
    std::vector<Element> mul;
    Element zero = 0;
    Element one = 0;
  };

  explicit FiniteSemiring(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;

  friend FiniteSemiring validate_semiring(SemiringTables candidate);
};

/// Checks the shape of the tables; throws ShapeError when malformed.
void check_shape(const SemiringTables& candidate);

/// Every violated axiom, one entry per axiom family with its first witness.
/// Throws ShapeError if the tables are malformed.
std::vector<AxiomFailure> axiom_failures(const SemiringTables& candidate);

/// Validates and freezes a candidate; throws ShapeError or AxiomViolation.
FiniteSemiring validate_semiring(SemiringTables candidate);

/// Parses exactly one semiring in the line-oriented text format.
FiniteSemiring parse_semiring(std::string_view text);

/// Parses a file holding any number of consecutive semiring blocks.
std::vector<FiniteSemiring> parse_semirings(std::string_view text);

/// Renders in the text format accepted by parse_semiring.
std::string render_semiring(const FiniteSemiring& s);

FiniteSemiring boolean_semiring();
/// ℕ with every value >= k identified into a single top element "T".
FiniteSemiring truncated_nat(unsigned k);
FiniteSemiring zmod(unsigned n);
/// Min-plus chain {inf, 0, 1, ..., k-2}: addition is min, multiplication is
/// addition with every sum >= k-1 sent to inf.
FiniteSemiring chain_minplus(unsigned k);

/// Built-in family by name: boolean, truncated_nat, zmod, chain_minplus.
FiniteSemiring builtin(std::string_view family, std::optional<unsigned> param = std::nullopt);

/// Parses "family" or "family:param" / "family(param)".
FiniteSemiring builtin_from_spec(std::string_view spec);

}  // namespace subtractive
