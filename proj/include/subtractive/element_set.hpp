#pragma once

#include <bit>
#include <cstdint>
#include <vector>

#include "subtractive/errors.hpp"

namespace subtractive {

/// Maximum order of a finite semiring; element subsets are single words.
inline constexpr std::size_t kMaxOrder = 64;

/// Subset of the elements of a finite semiring, one bit per element index.
class ElementSet {
 public:
  constexpr ElementSet() = default;
  constexpr explicit ElementSet(std::uint64_t bits) : bits_(bits) {}

  static constexpr ElementSet singleton(Element e) { return ElementSet(std::uint64_t{1} << e); }
  static constexpr ElementSet full(std::size_t order) {
    return ElementSet(order >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << order) - 1);
  }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool contains(Element e) const { return (bits_ >> e) & 1U; }
  constexpr void insert(Element e) { bits_ |= std::uint64_t{1} << e; }
  constexpr void erase(Element e) { bits_ &= ~(std::uint64_t{1} << e); }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr bool is_subset_of(ElementSet other) const { return (bits_ & ~other.bits_) == 0; }

  template <class F>
  constexpr void for_each(F&& f) const {
    for (std::uint64_t b = bits_; b != 0; b &= b - 1)
      f(static_cast<Element>(std::countr_zero(b)));
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size());
    for_each([&](Element e) { out.push_back(e); });
    return out;
  }

  constexpr ElementSet operator|(ElementSet o) const { return ElementSet(bits_ | o.bits_); }
  constexpr ElementSet operator&(ElementSet o) const { return ElementSet(bits_ & o.bits_); }
  constexpr ElementSet& operator|=(ElementSet o) {
    bits_ |= o.bits_;
    return *this;
  }
  constexpr ElementSet& operator&=(ElementSet o) {
    bits_ &= o.bits_;
    return *this;
  }
  constexpr bool operator==(const ElementSet&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

/// Deterministic ideal ordering: by cardinality, then by bit pattern.
constexpr bool canonical_less(ElementSet a, ElementSet b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.bits() < b.bits();
}

}  // namespace subtractive
