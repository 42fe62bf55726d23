#include "subtractive/topology.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_map>

namespace subtractive {

std::string_view to_string(Semantics s) { return s == Semantics::DownSet ? "downset" : "fixedpoint"; }

std::optional<Semantics> parse_semantics(std::string_view text) {
  if (text == "downset") return Semantics::DownSet;
  if (text == "fixedpoint") return Semantics::FixedPoint;
  return std::nullopt;
}

std::string render_points(const PointSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](std::size_t p) {
    if (!first) out += ',';
    out += 'P' + std::to_string(p);
    first = false;
  });
  return out + '}';
}

SubtractiveSpace::SubtractiveSpace(std::shared_ptr<const IdealLattice> lattice, Semantics semantics)
    : lattice_(std::move(lattice)), semantics_(semantics) {
  const auto& l = *lattice_;
  const std::size_t n = l.size();
  std::unordered_map<PointSet, std::size_t, PointSetHash> index;
  named_.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t c = l.closure_index(i);
    PointSet s(n);
    if (semantics_ == Semantics::DownSet) {
      for (std::size_t j = 0; j < n; ++j)
        if (l[j].is_subset_of(l[c])) s.insert(j);
    } else {
      s.insert(c);
    }
    auto [it, fresh] = index.try_emplace(s, subbasis_.size());
    if (fresh) subbasis_.push_back(std::move(s));
    named_[i] = it->second;
  }
  closures_.reserve(n);
  for (std::size_t p = 0; p < n; ++p) closures_.push_back(subtractive::point_closure(*this, p));
}

bool SubtractiveSpace::is_closed(const PointSet& s) const {
  bool closed = true;
  s.for_each([&](std::size_t p) { closed = closed && closures_[p].is_subset_of(s); });
  return closed;
}

PointSet SubtractiveSpace::subtractive_points() const {
  PointSet out(point_count());
  for (std::size_t i = 0; i < point_count(); ++i)
    if (lattice_->is_subtractive(i)) out.insert(i);
  return out;
}

SubtractiveSpace build_space(const IdealLattice& lattice, Semantics semantics, TopologyLimits limits) {
  if (lattice.size() > limits.max_points) throw CapExceeded("point count", lattice.size(), limits.max_points);
  return SubtractiveSpace(std::make_shared<const IdealLattice>(lattice), semantics);
}

PointSet point_closure(const SubtractiveSpace& space, std::size_t p) {
  PointSet out = space.all_points();
  for (const auto& s : space.subbasis())
    if (s.contains(p)) out &= s;
  return out;
}

ClosedFamily::ClosedFamily(std::vector<PointSet> sets) : sets_(std::move(sets)) {
  std::sort(sets_.begin(), sets_.end(), [](const PointSet& a, const PointSet& b) { return canonical_less(a, b); });
  lookup_.insert(sets_.begin(), sets_.end());
}

const PointSet& ClosedFamily::minimal_superset(std::size_t p) const {
  const PointSet* best = nullptr;
  for (const auto& s : sets_)
    if (s.contains(p) && (best == nullptr || s.size() < best->size())) best = &s;
  // the family is closed under ∩, so the smallest superset is the minimum
  return *best;
}

ClosedFamily closed_family(const SubtractiveSpace& space, std::size_t cap) {
  const std::size_t n = space.point_count();
  std::unordered_set<PointSet, PointSetHash> seen;
  std::vector<PointSet> all;
  std::deque<std::size_t> queue;
  auto visit = [&](PointSet s) {
    if (seen.contains(s)) return;
    if (seen.size() + 1 > cap) throw CapExceeded("closed family", seen.size() + 1, cap);
    seen.insert(s);
    all.push_back(std::move(s));
    queue.push_back(all.size() - 1);
  };

  // finite unions of subbasic sets
  visit(PointSet(n));
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& b : space.subbasis()) visit(all[i] | b);
  }
  // intersections of those unions; ∩ distributes over ∪, so the result stays union-closed
  std::vector<PointSet> unions = all;
  unions.push_back(space.all_points());
  visit(space.all_points());
  for (std::size_t i = 0; i < all.size(); ++i) queue.push_back(i);
  while (!queue.empty()) {
    const std::size_t i = queue.front();
    queue.pop_front();
    for (const auto& u : unions) visit(all[i] & u);
  }
  return ClosedFamily(std::move(all));
}

T0Verdict is_T0(const SubtractiveSpace& space) {
  const std::size_t n = space.point_count();
  std::unordered_map<PointSet, std::size_t, PointSetHash> first;
  for (std::size_t p = 0; p < n; ++p) {
    auto [it, fresh] = first.try_emplace(space.point_closure(p), p);
    if (!fresh) return {false, std::pair{it->second, p}};
  }
  return {};
}

T1Verdict is_T1_subspace(const SubtractiveSpace& space, const PointSet& points) {
  // the closure of {p} in the subspace is cl{p} ∩ points
  auto isolated = [&](const PointSet& sub, std::size_t p) {
    return (space.point_closure(p) & sub) == PointSet::singleton(space.point_count(), p);
  };
  T1Verdict v;
  points.for_each([&](std::size_t p) {
    if (v.holds && !isolated(points, p)) {
      v.holds = false;
      v.witness = p;
    }
  });
  for (std::size_t q = 0; q < space.point_count(); ++q) {
    if (points.contains(q)) continue;
    PointSet extended = points;
    extended.insert(q);
    bool ok = true;
    extended.for_each([&](std::size_t p) { ok = ok && isolated(extended, p); });
    v.extensions.emplace_back(q, ok);
  }
  return v;
}

std::optional<std::pair<PointSet, PointSet>> reducible_cover(const ClosedFamily& family, const PointSet& d) {
  std::vector<const PointSet*> proper;
  for (const auto& s : family.sets())
    if (s.is_proper_subset_of(d)) proper.push_back(&s);
  // a cover by proper closed subsets extends to one by maximal proper closed subsets
  std::vector<const PointSet*> maximal;
  for (const auto* a : proper) {
    bool dominated = false;
    for (const auto* b : proper)
      if (a != b && a->is_proper_subset_of(*b)) {
        dominated = true;
        break;
      }
    if (!dominated) maximal.push_back(a);
  }
  for (std::size_t i = 0; i < maximal.size(); ++i)
    for (std::size_t j = i + 1; j < maximal.size(); ++j)
      if ((*maximal[i] | *maximal[j]) == d) return std::pair{*maximal[i], *maximal[j]};
  return std::nullopt;
}

bool is_irreducible(const ClosedFamily& family, const PointSet& d) {
  return !d.empty() && !reducible_cover(family, d).has_value();
}

std::vector<std::size_t> generic_points(const SubtractiveSpace& space, const PointSet& d) {
  std::vector<std::size_t> out;
  d.for_each([&](std::size_t p) {
    if (space.point_closure(p) == d) out.push_back(p);
  });
  return out;
}

std::vector<ClosedSet> irreducible_closed_sets(const SubtractiveSpace& space, const ClosedFamily& family) {
  std::vector<ClosedSet> out;
  for (const auto& d : family.sets()) {
    if (d.empty()) continue;
    ClosedSet c;
    c.members = d;
    auto cover = reducible_cover(family, d);
    c.irreducible = !cover.has_value();
    c.cover = std::move(cover);
    c.generic_points = generic_points(space, d);
    out.push_back(std::move(c));
  }
  return out;
}

namespace {

PointSet preimage_under(const std::vector<std::size_t>& map, const PointSet& s, std::size_t universe) {
  PointSet out(universe);
  for (std::size_t j = 0; j < map.size(); ++j)
    if (s.contains(map[j])) out.insert(j);
  return out;
}

void require_matching(const Homomorphism& phi, const SubtractiveSpace& source_space,
                      const SubtractiveSpace& target_space) {
  if (source_space.semantics() != target_space.semantics())
    throw SpaceMismatch("spaces were built with different semantics");
  if (!(source_space.lattice().semiring() == phi.source()) || !(target_space.lattice().semiring() == phi.target()))
    throw SpaceMismatch("spaces do not belong to the homomorphism's source and target");
}

}  // namespace

InducedMap induced_map(const Homomorphism& phi, const SubtractiveSpace& source_space,
                       const SubtractiveSpace& target_space, const ClosedFamily* source_family) {
  require_matching(phi, source_space, target_space);
  const auto& ls = source_space.lattice();
  const auto& lt = target_space.lattice();
  InducedMap m;
  for (std::size_t j = 0; j < lt.size(); ++j) {
    const ElementSet pre = phi.preimage(lt[j].members());
    auto idx = ls.index_of(pre);
    if (!idx) throw std::logic_error("preimage of an ideal is not an ideal");
    m.point_map.push_back(*idx);
    if (lt.is_subtractive(j) && !ls.is_subtractive(*idx) && m.preserves_subtractive) {
      m.preserves_subtractive = false;
      m.preserves_witness = j;
    }
  }
  if (!is_subtractive(Ideal::from_members(phi.source(), phi.kernel())) && m.preserves_subtractive) {
    m.preserves_subtractive = false;
    m.preserves_witness = lt.zero_index();
  }

  const std::size_t nt = lt.size();
  for (const auto& b : source_space.subbasis())
    if (!target_space.is_closed(preimage_under(m.point_map, b, nt))) m.continuous_on_subbasis = false;

  if (source_family != nullptr) {
    for (const auto& f : source_family->sets()) {
      if (!target_space.is_closed(preimage_under(m.point_map, f, nt))) {
        m.continuous = false;
        m.continuity_witness = f;
        break;
      }
    }
  } else {
    m.continuous = m.continuous_on_subbasis;
  }

  for (std::size_t j = 0; j < nt; ++j) {
    target_space.point_closure(j).for_each([&](std::size_t k) {
      if (!source_space.point_closure(m.point_map[j]).contains(m.point_map[k])) m.continuous_by_closures = false;
    });
  }
  return m;
}

InducedMap induced_map(const Homomorphism& phi, Semantics semantics) {
  auto ss = build_space(enumerate_ideals(phi.source()), semantics);
  auto ts = build_space(enumerate_ideals(phi.target()), semantics);
  auto family = closed_family(ss);
  return induced_map(phi, ss, ts, &family);
}

HomeomorphismVerdict is_homeomorphism_on_subtractive(const Homomorphism& phi, const SubtractiveSpace& source_space,
                                                     const SubtractiveSpace& target_space,
                                                     const ClosedFamily& source_family,
                                                     const ClosedFamily& target_family) {
  if (!phi.is_surjective()) throw NotSurjective();
  const auto m = induced_map(phi, source_space, target_space, &source_family);
  const PointSet sub_s = source_space.subtractive_points();
  const PointSet sub_t = target_space.subtractive_points();
  const std::size_t ns = source_space.point_count();
  const std::size_t nt = target_space.point_count();
  HomeomorphismVerdict v;

  std::unordered_map<std::size_t, std::size_t> hit;
  sub_t.for_each([&](std::size_t j) {
    const std::size_t i = m.point_map[j];
    if (!sub_s.contains(i) && v.into_subtractive) {
      v.into_subtractive = false;
      v.witnesses.push_back("into: P" + std::to_string(j) + " -> P" + std::to_string(i) + " not subtractive");
    }
    auto [it, fresh] = hit.try_emplace(i, j);
    if (!fresh && v.injective) {
      v.injective = false;
      v.witnesses.push_back("injective: P" + std::to_string(it->second) + ",P" + std::to_string(j) + " -> P" +
                            std::to_string(i));
    }
  });
  sub_s.for_each([&](std::size_t i) {
    if (!hit.contains(i) && v.surjective) {
      v.surjective = false;
      v.witnesses.push_back("surjective: P" + std::to_string(i) + " not hit");
    }
  });

  // closed sets of a subspace are the traces of ambient closed sets
  auto traces = [](const ClosedFamily& fam, const PointSet& sub) {
    std::unordered_set<PointSet, PointSetHash> out;
    for (const auto& f : fam.sets()) out.insert(f & sub);
    return out;
  };
  const auto closed_s = traces(source_family, sub_s);
  const auto closed_t = traces(target_family, sub_t);

  for (const auto& g : closed_s) {
    PointSet pre(nt);
    sub_t.for_each([&](std::size_t j) {
      if (g.contains(m.point_map[j])) pre.insert(j);
    });
    if (!closed_t.contains(pre)) {
      v.continuous = false;
      v.witnesses.push_back("continuous: preimage of " + render_points(g) + " is " + render_points(pre));
      break;
    }
  }
  for (const auto& g : closed_t) {
    PointSet img(ns);
    g.for_each([&](std::size_t j) { img.insert(m.point_map[j]); });
    if (!closed_s.contains(img & sub_s) || !img.is_subset_of(sub_s)) {
      v.closed = false;
      v.witnesses.push_back("closed: image of " + render_points(g) + " is " + render_points(img));
      break;
    }
  }
  return v;
}

HomeomorphismVerdict is_homeomorphism_on_subtractive(const Homomorphism& phi, Semantics semantics) {
  if (!phi.is_surjective()) throw NotSurjective();
  auto ss = build_space(enumerate_ideals(phi.source()), semantics);
  auto ts = build_space(enumerate_ideals(phi.target()), semantics);
  auto fs = closed_family(ss);
  auto ft = closed_family(ts);
  return is_homeomorphism_on_subtractive(phi, ss, ts, fs, ft);
}

}  // namespace subtractive
