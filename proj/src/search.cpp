#include "subtractive/search.hpp"

#include <algorithm>
#include <numeric>

namespace subtractive {

namespace {

constexpr Element kUnset = ~Element{0};

std::vector<std::string> numeric_labels(std::size_t n) {
  std::vector<std::string> out;
  for (std::size_t i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

using Flat = std::vector<Element>;

Flat flatten(const SemiringTables& t) {
  Flat f;
  for (const auto& row : t.add) f.insert(f.end(), row.begin(), row.end());
  for (const auto& row : t.mul) f.insert(f.end(), row.begin(), row.end());
  return f;
}

class Searcher {
 public:
  Searcher(std::size_t n, bool canonical, std::optional<std::size_t> limit)
      : n_(static_cast<Element>(n)), canonical_(canonical), limit_(limit) {
    add_.assign(n_ * n_, kUnset);
    mul_.assign(n_ * n_, kUnset);
    for (Element x = 0; x < n_; ++x) {
      set(add_, 0, x, x);
      set(mul_, 0, x, 0);
      set(mul_, 1, x, x);
    }
    for (Element i = 1; i < n_; ++i)
      for (Element j = i; j < n_; ++j) cells_.push_back({true, i, j});
    for (Element i = 2; i < n_; ++i)
      for (Element j = i; j < n_; ++j) cells_.push_back({false, i, j});
    std::vector<Element> rest(n_ > 2 ? n_ - 2 : 0);
    std::iota(rest.begin(), rest.end(), Element{2});
    do {
      std::vector<Element> perm{0, 1};
      perm.insert(perm.end(), rest.begin(), rest.end());
      perms_.push_back(std::move(perm));
    } while (std::next_permutation(rest.begin(), rest.end()));
  }

  Corpus run() {
    Corpus c;
    c.max_order = n_;
    c.canonical_only = canonical_;
    c.limit = limit_;
    recurse(0, c);
    return c;
  }

 private:
  struct Cell {
    bool is_add;
    Element i, j;
  };

  Element at(const std::vector<Element>& t, Element x, Element y) const {
    return x == kUnset || y == kUnset ? kUnset : t[x * n_ + y];
  }
  void set(std::vector<Element>& t, Element x, Element y, Element v) {
    t[x * n_ + y] = v;
    t[y * n_ + x] = v;
  }

  bool consistent() const {
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y)
        for (Element z = 0; z < n_; ++z) {
          auto eq = [](Element a, Element b) { return a == kUnset || b == kUnset || a == b; };
          if (!eq(at(add_, at(add_, x, y), z), at(add_, x, at(add_, y, z)))) return false;
          if (!eq(at(mul_, at(mul_, x, y), z), at(mul_, x, at(mul_, y, z)))) return false;
          if (!eq(at(mul_, x, at(add_, y, z)), at(add_, at(mul_, x, y), at(mul_, x, z)))) return false;
        }
    return true;
  }

  SemiringTables tables() const {
    SemiringTables t;
    t.labels = numeric_labels(n_);
    t.add.assign(n_, std::vector<Element>(n_));
    t.mul.assign(n_, std::vector<Element>(n_));
    for (Element x = 0; x < n_; ++x)
      for (Element y = 0; y < n_; ++y) {
        t.add[x][y] = add_[x * n_ + y];
        t.mul[x][y] = mul_[x * n_ + y];
      }
    t.zero = 0;
    t.one = 1;
    return t;
  }

  bool is_canonical(const SemiringTables& t) const {
    const Flat mine = flatten(t);
    for (const auto& p : perms_)
      if (flatten(permute(t, p)) < mine) return false;
    return true;
  }

  // true once the limit is hit
  bool recurse(std::size_t k, Corpus& c) {
    if (k == cells_.size()) {
      SemiringTables t = tables();
      if (canonical_ && !is_canonical(t)) return false;
      if (limit_ && c.structures.size() == *limit_) {
        c.limit_reached = true;
        return true;
      }
      t.name = "ord" + std::to_string(n_) + "_" + std::to_string(c.structures.size());
      c.structures.push_back(validate_semiring(std::move(t)));
      return false;
    }
    const Cell& cell = cells_[k];
    auto& table = cell.is_add ? add_ : mul_;
    for (Element v = 0; v < n_; ++v) {
      set(table, cell.i, cell.j, v);
      if (consistent() && recurse(k + 1, c)) return true;
    }
    set(table, cell.i, cell.j, kUnset);
    return false;
  }

  Element n_;
  bool canonical_;
  std::optional<std::size_t> limit_;
  std::vector<Element> add_, mul_;
  std::vector<Cell> cells_;
  std::vector<std::vector<Element>> perms_;
};

}  // namespace

SemiringTables permute(const SemiringTables& t, const std::vector<Element>& perm) {
  const std::size_t n = t.labels.size();
  SemiringTables out = t;
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      out.add[perm[x]][perm[y]] = perm[t.add[x][y]];
      out.mul[perm[x]][perm[y]] = perm[t.mul[x][y]];
    }
  for (std::size_t x = 0; x < n; ++x) out.labels[perm[x]] = t.labels[x];
  out.zero = perm[t.zero];
  out.one = perm[t.one];
  return out;
}

SemiringTables canonical_form(const FiniteSemiring& s) {
  const auto n = static_cast<Element>(s.order());
  const SemiringTables t = s.tables();
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), Element{0});
  std::optional<SemiringTables> best;
  Flat best_flat;
  do {
    // zero to index 0, one to index 1 when distinct
    if (perm[s.zero()] != 0) continue;
    if (n > 1 && perm[s.one()] != 1) continue;
    SemiringTables cand = permute(t, perm);
    Flat f = flatten(cand);
    if (!best || f < best_flat) {
      best = std::move(cand);
      best_flat = std::move(f);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  best->labels = numeric_labels(n);
  return *best;
}

bool isomorphic(const FiniteSemiring& a, const FiniteSemiring& b) {
  if (a.order() != b.order()) return false;
  SemiringTables ca = canonical_form(a);
  SemiringTables cb = canonical_form(b);
  return flatten(ca) == flatten(cb) && ca.zero == cb.zero && ca.one == cb.one;
}

Corpus search_semirings(std::size_t order, bool canonical, std::optional<std::size_t> limit) {
  if (order < 1 || order > kMaxSearchOrder)
    throw InvalidParam("search order must be between 1 and " + std::to_string(kMaxSearchOrder));
  if (order == 1) {
    Corpus c;
    c.max_order = 1;
    c.canonical_only = canonical;
    c.limit = limit;
    if (limit && *limit == 0) {
      c.limit_reached = true;
      return c;
    }
    SemiringTables t;
    t.name = "ord1_0";
    t.labels = {"0"};
    t.add = {{0}};
    t.mul = {{0}};
    c.structures.push_back(validate_semiring(std::move(t)));
    return c;
  }
  return Searcher(order, canonical, limit).run();
}

Corpus standard_corpus(std::size_t max_order) {
  Corpus c;
  c.max_order = max_order;
  c.canonical_only = true;
  c.structures = {boolean_semiring(), zmod(2),         zmod(4),
                  truncated_nat(2),   truncated_nat(3), chain_minplus(4)};
  for (std::size_t n = 1; n <= max_order; ++n) {
    auto part = search_semirings(n, true);
    c.structures.insert(c.structures.end(), part.structures.begin(), part.structures.end());
  }
  return c;
}

}  // namespace subtractive
