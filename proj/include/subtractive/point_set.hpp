#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <vector>

namespace subtractive {

/// Dynamic bitset over the points of a space (ideal indices).
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(std::size_t universe) : universe_(universe), words_((universe + 63) / 64, 0) {}

  static PointSet full(std::size_t universe) {
    PointSet s(universe);
    for (std::size_t i = 0; i < universe; ++i) s.insert(i);
    return s;
  }
  static PointSet singleton(std::size_t universe, std::size_t p) {
    PointSet s(universe);
    s.insert(p);
    return s;
  }

  std::size_t universe() const { return universe_; }
  bool contains(std::size_t p) const { return (words_[p / 64] >> (p % 64)) & 1U; }
  void insert(std::size_t p) { words_[p / 64] |= std::uint64_t{1} << (p % 64); }
  void erase(std::size_t p) { words_[p / 64] &= ~(std::uint64_t{1} << (p % 64)); }

  std::size_t size() const {
    std::size_t n = 0;
    for (auto w : words_) n += static_cast<std::size_t>(std::popcount(w));
    return n;
  }
  bool empty() const {
    for (auto w : words_)
      if (w) return false;
    return true;
  }
  bool is_subset_of(const PointSet& o) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~o.words_[i]) return false;
    return true;
  }
  bool is_proper_subset_of(const PointSet& o) const { return is_subset_of(o) && *this != o; }

  PointSet& operator|=(const PointSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  PointSet& operator&=(const PointSet& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  friend PointSet operator|(PointSet a, const PointSet& b) { return a |= b; }
  friend PointSet operator&(PointSet a, const PointSet& b) { return a &= b; }
  bool operator==(const PointSet&) const = default;

  template <class F>
  void for_each(F&& f) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      for (std::uint64_t b = words_[i]; b != 0; b &= b - 1)
        f(i * 64 + static_cast<std::size_t>(std::countr_zero(b)));
  }

  std::vector<std::size_t> points() const {
    std::vector<std::size_t> out;
    for_each([&](std::size_t p) { out.push_back(p); });
    return out;
  }

  std::size_t hash() const {
    std::size_t h = universe_;
    for (auto w : words_) h = h * 0x9E3779B97F4A7C15ULL ^ std::hash<std::uint64_t>{}(w);
    return h;
  }

  /// Cardinality first, then lowest-indexed points first.
  friend bool canonical_less(const PointSet& a, const PointSet& b) {
    const auto sa = a.size();
    const auto sb = b.size();
    if (sa != sb) return sa < sb;
    for (std::size_t i = a.words_.size(); i-- > 0;)
      if (a.words_[i] != b.words_[i]) return a.words_[i] < b.words_[i];
    return false;
  }

 private:
  std::size_t universe_ = 0;
  std::vector<std::uint64_t> words_;
};

struct PointSetHash {
  std::size_t operator()(const PointSet& s) const { return s.hash(); }
};

}  // namespace subtractive
