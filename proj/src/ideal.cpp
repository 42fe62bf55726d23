#include "subtractive/ideal.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace subtractive {

namespace {

void require_same_parent(const Ideal& a, const Ideal& b) {
  if (!(a.parent() == b.parent())) throw ParentMismatch();
}

// One round of closure under + within the set and r·(-) by every element.
ElementSet close_once(const FiniteSemiring& s, ElementSet cur) {
  ElementSet next = cur;
  const auto n = static_cast<Element>(s.order());
  cur.for_each([&](Element x) {
    cur.for_each([&](Element y) { next.insert(s.add(x, y)); });
    for (Element r = 0; r < n; ++r) next.insert(s.mul(r, x));
  });
  return next;
}

}  // namespace

bool is_ideal(const FiniteSemiring& s, ElementSet members) {
  if (!members.is_subset_of(s.all()) || !members.contains(s.zero())) return false;
  return close_once(s, members) == members;
}

Ideal Ideal::from_members(FiniteSemiring parent, ElementSet members) {
  if (!is_ideal(parent, members))
    throw InvalidIdeal(render_elements(parent, members & parent.all()) + " is not an ideal of " + parent.name());
  return Ideal(std::move(parent), members);
}

Ideal generate_ideal(const FiniteSemiring& s, ElementSet seed) {
  ElementSet cur = (seed & s.all()) | ElementSet::singleton(s.zero());
  for (;;) {
    ElementSet next = close_once(s, cur);
    if (next == cur) break;
    cur = next;
  }
  return Ideal(s, cur);
}

Ideal subtractive_closure(const Ideal& ideal) {
  const auto& s = ideal.parent();
  const auto n = static_cast<Element>(s.order());
  ElementSet out;
  for (Element r = 0; r < n; ++r) {
    bool member = false;
    ideal.members().for_each([&](Element x) { member = member || ideal.contains(s.add(r, x)); });
    if (member) out.insert(r);
  }
  return Ideal(s, out);
}

std::optional<std::pair<Element, Element>> subtractivity_witness(const Ideal& ideal) {
  const auto& s = ideal.parent();
  const auto n = static_cast<Element>(s.order());
  for (Element x = 0; x < n; ++x) {
    if (!ideal.contains(x)) continue;
    for (Element y = 0; y < n; ++y)
      if (!ideal.contains(y) && ideal.contains(s.add(x, y))) return std::pair{x, y};
  }
  return std::nullopt;
}

bool is_subtractive(const Ideal& ideal) {
  const bool fixed = subtractive_closure(ideal) == ideal;
  const bool definitional = !subtractivity_witness(ideal).has_value();
  if (fixed != definitional)
    throw std::logic_error("closure fixpoint and definitional subtractivity disagree on " + render_ideal(ideal));
  return fixed;
}

Ideal ideal_sum(const Ideal& a, const Ideal& b) {
  require_same_parent(a, b);
  const auto& s = a.parent();
  ElementSet sums;
  a.members().for_each([&](Element x) { b.members().for_each([&](Element y) { sums.insert(s.add(x, y)); }); });
  return generate_ideal(s, sums);
}

Ideal ideal_product(const Ideal& a, const Ideal& b) {
  require_same_parent(a, b);
  const auto& s = a.parent();
  ElementSet products;
  a.members().for_each(
      [&](Element x) { b.members().for_each([&](Element y) { products.insert(s.mul(x, y)); }); });
  return generate_ideal(s, products);
}

Ideal ideal_intersection(std::span<const Ideal> ideals) {
  if (ideals.empty()) throw EmptyFamily();
  ElementSet acc = ideals.front().members();
  for (const auto& i : ideals.subspan(1)) {
    require_same_parent(ideals.front(), i);
    acc &= i.members();
  }
  return Ideal(ideals.front().parent(), acc);
}

Ideal radical(const Ideal& ideal) {
  const auto& s = ideal.parent();
  const auto n = static_cast<Element>(s.order());
  ElementSet out;
  for (Element r = 0; r < n; ++r) {
    // the power sequence r, r^2, ... visits every value it ever takes within n steps
    Element p = r;
    for (Element k = 0; k < n; ++k) {
      if (ideal.contains(p)) {
        out.insert(r);
        break;
      }
      p = s.mul(p, r);
    }
  }
  if (!is_ideal(s, out)) throw std::logic_error("radical of " + render_ideal(ideal) + " is not an ideal");
  return Ideal(s, out);
}

std::string render_elements(const FiniteSemiring& s, ElementSet members) {
  std::string out = "{";
  bool first = true;
  members.for_each([&](Element e) {
    if (!first) out += ',';
    out += s.label(e);
    first = false;
  });
  out += '}';
  return out;
}

std::string render_ideal(const Ideal& ideal) { return render_elements(ideal.parent(), ideal.members()); }

ElementSet parse_element_labels(const FiniteSemiring& s, std::string_view text) {
  auto trim = [](std::string_view v) {
    while (!v.empty() && (v.front() == ' ' || v.front() == '\t')) v.remove_prefix(1);
    while (!v.empty() && (v.back() == ' ' || v.back() == '\t')) v.remove_suffix(1);
    return v;
  };
  text = trim(text);
  if (!text.empty() && text.front() == '{') {
    if (text.back() != '}') throw InvalidParam("unbalanced braces in element list");
    text = trim(text.substr(1, text.size() - 2));
  }
  ElementSet out;
  while (!text.empty()) {
    auto comma = text.find(',');
    std::string_view tok = trim(text.substr(0, comma));
    if (tok.empty()) throw InvalidParam("empty label in element list");
    auto e = s.find_label(tok);
    if (!e) throw InvalidParam("unknown element label '" + std::string(tok) + "'");
    out.insert(*e);
    if (comma == std::string_view::npos) break;
    text = text.substr(comma + 1);
    if (trim(text).empty()) throw InvalidParam("trailing comma in element list");
  }
  return out;
}

IdealLattice::IdealLattice(FiniteSemiring s, std::vector<Ideal> ideals)
    : semiring_(std::move(s)), ideals_(std::move(ideals)) {
  for (std::size_t i = 0; i < ideals_.size(); ++i) index_.emplace(ideals_[i].members().bits(), i);
  subtractive_.resize(ideals_.size());
  closure_.resize(ideals_.size());
  for (std::size_t i = 0; i < ideals_.size(); ++i) {
    subtractive_[i] = subtractive::is_subtractive(ideals_[i]);
    closure_[i] = index_.at(subtractive_closure(ideals_[i]).members().bits());
  }
}

std::vector<std::size_t> IdealLattice::subtractive_indices() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < ideals_.size(); ++i)
    if (subtractive_[i]) out.push_back(i);
  return out;
}

std::optional<std::size_t> IdealLattice::index_of(ElementSet members) const {
  auto it = index_.find(members.bits());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

IdealLattice enumerate_ideals(const FiniteSemiring& s, IdealLimits limits) {
  if (s.order() > limits.max_order) throw CapExceeded("semiring order", s.order(), limits.max_order);
  const auto n = static_cast<Element>(s.order());
  std::vector<ElementSet> principal;
  for (Element e = 0; e < n; ++e) principal.push_back(generate_ideal(s, ElementSet::singleton(e)).members());

  std::unordered_set<std::uint64_t> seen;
  std::vector<ElementSet> found;
  std::deque<ElementSet> queue;
  auto visit = [&](ElementSet m) {
    if (!seen.insert(m.bits()).second) return;
    if (seen.size() > limits.max_ideals) throw CapExceeded("ideal count", seen.size(), limits.max_ideals);
    found.push_back(m);
    queue.push_back(m);
  };
  visit(generate_ideal(s, ElementSet{}).members());
  for (auto p : principal) visit(p);
  // every ideal is a join of principal ideals, so joining one at a time reaches all
  while (!queue.empty()) {
    ElementSet cur = queue.front();
    queue.pop_front();
    for (auto p : principal)
      if (!p.is_subset_of(cur)) visit(generate_ideal(s, cur | p).members());
  }
  std::sort(found.begin(), found.end(), canonical_less);
  std::vector<Ideal> ideals;
  ideals.reserve(found.size());
  for (auto m : found) ideals.push_back(Ideal::from_members(s, m));
  return IdealLattice(s, std::move(ideals));
}

GaloisVerdict check_galois(const IdealLattice& l) {
  for (std::size_t i = 0; i < l.size(); ++i) {
    const Ideal& closure = l[l.closure_index(i)];
    for (std::size_t k : l.subtractive_indices()) {
      const bool lhs = closure.is_subset_of(l[k]);
      const bool rhs = l[i].is_subset_of(l[k]);
      if (lhs != rhs) return {false, std::pair{i, k}};
    }
  }
  return {};
}

Ideal lattice_join(const Ideal& a, const Ideal& b, bool subtractive) {
  Ideal sum = ideal_sum(a, b);
  return subtractive ? subtractive_closure(sum) : sum;
}

ModularityVerdict is_modular(const IdealLattice& l, bool restrict_to_subtractive) {
  std::vector<std::size_t> pts;
  if (restrict_to_subtractive) {
    pts = l.subtractive_indices();
  } else {
    for (std::size_t i = 0; i < l.size(); ++i) pts.push_back(i);
  }
  const std::size_t m = pts.size();
  // precompute joins within the chosen sublattice
  std::vector<ElementSet> join(m * m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      join[i * m + j] = lattice_join(l[pts[i]], l[pts[j]], restrict_to_subtractive).members();
  auto local = [&](ElementSet e) {
    auto idx = l.index_of(e);
    auto it = std::find(pts.begin(), pts.end(), *idx);
    return static_cast<std::size_t>(it - pts.begin());
  };
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t c = 0; c < m; ++c) {
      if (!l[pts[a]].is_subset_of(l[pts[c]])) continue;
      for (std::size_t b = 0; b < m; ++b) {
        const ElementSet b_meet_c = l[pts[b]].members() & l[pts[c]].members();
        const ElementSet lhs = join[a * m + local(b_meet_c)];
        const ElementSet rhs = join[a * m + b] & l[pts[c]].members();
        if (lhs != rhs) return {false, std::array{pts[a], pts[b], pts[c]}};
      }
    }
  return {};
}

}  // namespace subtractive
