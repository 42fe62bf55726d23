#include "subtractive/claims.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <map>
#include <sstream>
#include <thread>

#include "subtractive/nat_ideal.hpp"

namespace subtractive {

namespace {

using P = ClaimPolicy;
using S = ClaimScope;

// clang-format off
constexpr Claim kClaims[] = {
    {"C1.1", "I ⊆ C(I)", "closure-operator lemma: extensive", S::PerIdeal, false, P::MustHold, true, true},
    {"C1.2", "C(0) = 0", "closure-operator lemma: zero ideal", S::PerLattice, false, P::MustHold, true, true},
    {"C1.3", "C(S) = S", "closure-operator lemma: whole semiring", S::PerLattice, false, P::MustHold, true, true},
    {"C1.4", "C(C(I)) = C(I)", "closure-operator lemma: idempotent", S::PerIdeal, false, P::MustHold, true, true},
    {"C1.5", "I ⊆ J ⇒ C(I) ⊆ C(J)", "closure-operator lemma: monotone", S::PerPair, false, P::MustHold, true, true},
    {"C1.6", "C(I + J) ⊇ C(I) ∪ C(J)", "closure-operator lemma: unions", S::PerPair, false, P::MustHold, true, true},
    {"C1.7", "C(⋂ I_λ) = ⋂ C(I_λ)", "closure-operator lemma: intersections", S::PerFamily, false, P::MustHold, true, true},
    {"C1.8", "C(I) is the least subtractive ideal containing I", "closure-operator lemma: least subtractive", S::PerIdeal, false, P::MustHold, true, true},
    {"C1.9", "I subtractive ⟺ I = C(I)", "closure-operator lemma: fixed points", S::PerIdeal, false, P::MustHold, true, true},
    {"C2", "C(I) ⊆ K ⟺ I ⊆ K for subtractive K", "closure and inclusion form a Galois connection", S::PerLattice, false, P::MustHold, true, true},
    {"C3", "I, J subtractive ⇒ IJ subtractive and IJ ⊆ I ∩ J", "product of subtractive ideals", S::PerPair, false, P::VerifyOrRefute, true, true},
    {"C4", "⋂ of subtractive ideals is subtractive", "intersections of subtractive ideals", S::PerFamily, false, P::MustHold, true, true},
    {"C5", "some subtractive I, J have I + J not subtractive", "sum counterexample 2N + 3N in N", S::PerPair, false, P::MustHold, false, true},
    {"C6", "Idl_sub(S) is a modular lattice", "modularity of the subtractive lattice", S::PerLattice, false, P::VerifyOrRefute, true, false},
    {"C7", "C(I) ⊆ C(√I)", "closure below closure of the radical", S::PerIdeal, false, P::MustHold, true, true},
    {"C8", "subbasic closed sets correspond to subtractive ideals", "subbasic closed sets are the subtractive ideals", S::PerSpace, true, P::MustHold, true, false},
    {"C9", "the subtractive space is T0", "every subtractive space is T0", S::PerSpace, true, P::VerifyOrRefute, true, false},
    {"C10", "nonempty subbasic closed sets are irreducible", "subbasic closed sets are irreducible", S::PerSpace, true, P::VerifyOrRefute, true, false},
    {"C11", "Idl_sub(S) is a maximal T1 subspace", "largest T1 subspace", S::PerSpace, true, P::VerifyOrRefute, true, false},
    {"C12", "nonempty irreducible closed sets have a unique generic point", "unique generic points", S::PerSpace, true, P::VerifyOrRefute, true, false},
    {"C13", "φ⁻¹(J) subtractive for subtractive J, ker φ subtractive, φ⁻¹(J) = C(φ⁻¹(J))", "preimages of subtractive ideals", S::PerHomomorphism, false, P::MustHold, true, false},
    {"C14", "φ_! : Idl(S') → Idl(S) is continuous", "induced map is continuous", S::PerHomomorphism, true, P::MustHold, true, false},
    {"C15", "φ surjective ⇒ φ_! : Idl_sub(S') → Idl_sub(S) is a homeomorphism", "surjections induce homeomorphisms", S::PerHomomorphism, true, P::VerifyOrRefute, true, false},
};

constexpr Claim kInternal[] = {
    {"X1", "enumerated ideals = power-set filter; lattice closed under ∩", "ideal enumeration cross-check", S::Internal, false, P::MustHold, true, false},
    {"X2", "closure fixpoint ⟺ definitional subtractivity", "two routes to subtractivity", S::Internal, false, P::MustHold, true, true},
    {"X3", "subbasis-intersection closure = least closed superset", "point closure cross-check", S::Internal, true, P::MustHold, true, false},
    {"X4", "continuity: all closed sets ⟺ subbasis ⟺ point closures", "continuity cross-check", S::PerHomomorphism, true, P::MustHold, true, false},
};
// clang-format on

constexpr std::size_t kBruteForceOrder = 5;

class Deadline {
 public:
  explicit Deadline(std::chrono::milliseconds budget) : end_(std::chrono::steady_clock::now() + budget) {}
  void check() const {
    if (std::chrono::steady_clock::now() > end_) throw BudgetExceeded("time budget exhausted");
  }

 private:
  std::chrono::steady_clock::time_point end_;
};

/// A prerequisite (lattice, space, family) could not be built within caps.
struct Unavailable {
  std::string reason;
};

struct Verdict {
  bool holds = true;
  std::string witness;

  static Verdict fail(std::string w) { return {false, std::move(w)}; }
};

struct SpaceData {
  std::optional<SubtractiveSpace> space;
  std::optional<ClosedFamily> family;
  std::string error;
  std::string family_error;
};

struct Context {
  FiniteSemiring semiring;
  std::optional<IdealLattice> lattice;
  std::string lattice_error;
  SpaceData spaces[2];

  const IdealLattice& ideals() const {
    if (!lattice) throw Unavailable{lattice_error};
    return *lattice;
  }
  const SpaceData& data(Semantics s) const { return spaces[static_cast<int>(s)]; }
  const SubtractiveSpace& space(Semantics s) const {
    ideals();
    const auto& d = data(s);
    if (!d.space) throw Unavailable{d.error};
    return *d.space;
  }
  const ClosedFamily& family(Semantics s) const {
    space(s);
    const auto& d = data(s);
    if (!d.family) throw Unavailable{d.family_error};
    return *d.family;
  }
};

Context make_context(const FiniteSemiring& s, const CheckLimits& limits, std::span<const Semantics> sems) {
  Context c{s, std::nullopt, {}, {}};
  try {
    c.lattice.emplace(enumerate_ideals(s, limits.ideals));
  } catch (const CapExceeded& e) {
    c.lattice_error = e.what();
    return c;
  }
  for (Semantics sem : sems) {
    auto& d = c.spaces[static_cast<int>(sem)];
    try {
      d.space.emplace(build_space(*c.lattice, sem, limits.topology));
    } catch (const CapExceeded& e) {
      d.error = e.what();
      continue;
    }
    try {
      d.family.emplace(closed_family(*d.space, limits.topology.max_closed));
    } catch (const CapExceeded& e) {
      d.family_error = e.what();
    }
  }
  return c;
}

bool definitionally_subtractive(const Ideal& i) { return !subtractivity_witness(i).has_value(); }

std::string point_name(const IdealLattice& l, std::size_t p) { return "P" + std::to_string(p) + "=" + render_ideal(l[p]); }

// -- finite per-structure claims ------------------------------------------

Verdict eval_finite(std::string_view id, const Context& ctx, std::optional<Semantics> sem, const Deadline& dl) {
  const auto& s = ctx.semiring;

  if (id == "X1") {
    const auto& l = ctx.ideals();
    std::vector<ElementSet> brute;
    const std::uint64_t count = std::uint64_t{1} << s.order();
    for (std::uint64_t bits = 0; bits < count; ++bits)
      if (is_ideal(s, ElementSet(bits))) brute.emplace_back(bits);
    std::sort(brute.begin(), brute.end(), canonical_less);
    if (brute.size() != l.size())
      return Verdict::fail("enumerated " + std::to_string(l.size()) + " ideals, power set has " +
                           std::to_string(brute.size()));
    for (std::size_t i = 0; i < l.size(); ++i)
      if (!(brute[i] == l[i].members())) return Verdict::fail("mismatch at " + point_name(l, i));
    for (std::size_t i = 0; i < l.size(); ++i)
      for (std::size_t j = 0; j < l.size(); ++j)
        if (!l.index_of(l[i].members() & l[j].members()))
          return Verdict::fail("not closed under ∩: " + point_name(l, i) + " " + point_name(l, j));
    return {};
  }

  const auto& l = ctx.ideals();
  const std::size_t n = l.size();
  auto closure = [&](std::size_t i) -> const Ideal& { return l[l.closure_index(i)]; };

  if (id == "X2") {
    for (std::size_t i = 0; i < n; ++i) {
      const bool fixed = closure(i) == l[i];
      if (fixed != definitionally_subtractive(l[i]))
        return Verdict::fail(point_name(l, i) + " fixpoint=" + (fixed ? "yes" : "no"));
    }
    return {};
  }
  if (id == "C1.1") {
    for (std::size_t i = 0; i < n; ++i)
      if (!l[i].is_subset_of(closure(i)))
        return Verdict::fail("I=" + render_ideal(l[i]) + " C(I)=" + render_ideal(closure(i)));
    return {};
  }
  if (id == "C1.2") {
    const Ideal c = subtractive_closure(generate_ideal(s, {}));
    if (c.size() != 1) return Verdict::fail("C(0)=" + render_ideal(c));
    return {};
  }
  if (id == "C1.3") {
    const Ideal whole = generate_ideal(s, s.all());
    const Ideal c = subtractive_closure(whole);
    if (!(c == whole)) return Verdict::fail("C(S)=" + render_ideal(c));
    return {};
  }
  if (id == "C1.4") {
    for (std::size_t i = 0; i < n; ++i) {
      const Ideal twice = subtractive_closure(closure(i));
      if (!(twice == closure(i)))
        return Verdict::fail("I=" + render_ideal(l[i]) + " C(I)=" + render_ideal(closure(i)) +
                             " C(C(I))=" + render_ideal(twice));
    }
    return {};
  }
  if (id == "C1.5") {
    for (std::size_t i = 0; i < n; ++i) {
      dl.check();
      for (std::size_t j = 0; j < n; ++j)
        if (l[i].is_subset_of(l[j]) && !closure(i).is_subset_of(closure(j)))
          return Verdict::fail("I=" + render_ideal(l[i]) + " J=" + render_ideal(l[j]));
    }
    return {};
  }
  if (id == "C1.6") {
    for (std::size_t i = 0; i < n; ++i) {
      dl.check();
      for (std::size_t j = 0; j < n; ++j) {
        const Ideal c = subtractive_closure(ideal_sum(l[i], l[j]));
        if (!(closure(i).members() | closure(j).members()).is_subset_of(c.members()))
          return Verdict::fail("I=" + render_ideal(l[i]) + " J=" + render_ideal(l[j]) + " C(I+J)=" + render_ideal(c));
      }
    }
    return {};
  }
  if (id == "C1.7" || id == "C4") {
    const bool sub_only = id == "C4";
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < n; ++i)
      if (!sub_only || l.is_subtractive(i)) pool.push_back(i);
    auto check = [&](const std::vector<std::size_t>& fam) -> std::optional<Verdict> {
      ElementSet meet = s.all();
      ElementSet meet_of_closures = s.all();
      for (auto i : fam) {
        meet &= l[i].members();
        meet_of_closures &= closure(i).members();
      }
      auto describe = [&] {
        std::string w = "family";
        for (auto i : fam) w += " " + render_ideal(l[i]);
        return w;
      };
      const auto idx = l.index_of(meet);
      if (!idx) return Verdict::fail(describe() + " intersection is not an ideal");
      if (sub_only) {
        if (!definitionally_subtractive(l[*idx])) return Verdict::fail(describe() + " ∩=" + render_ideal(l[*idx]));
      } else if (!(closure(*idx).members() == meet_of_closures)) {
        return Verdict::fail(describe() + " C(∩)=" + render_ideal(closure(*idx)) + " ∩C=" +
                             render_elements(s, meet_of_closures));
      }
      return std::nullopt;
    };
    const std::size_t m = pool.size();
    for (std::size_t a = 0; a < m; ++a) {
      dl.check();
      if (auto v = check({pool[a]})) return *v;
      for (std::size_t b = a + 1; b < m; ++b) {
        if (auto v = check({pool[a], pool[b]})) return *v;
        for (std::size_t c = b + 1; c < m; ++c)
          if (auto v = check({pool[a], pool[b], pool[c]})) return *v;
      }
    }
    if (!pool.empty())
      if (auto v = check(pool)) return *v;
    return {};
  }
  if (id == "C1.8") {
    for (std::size_t i = 0; i < n; ++i) {
      const Ideal& c = closure(i);
      if (!definitionally_subtractive(c)) return Verdict::fail("C(" + render_ideal(l[i]) + ") not subtractive");
      if (!l[i].is_subset_of(c)) return Verdict::fail("C(" + render_ideal(l[i]) + ") misses I");
      for (std::size_t k : l.subtractive_indices())
        if (l[i].is_subset_of(l[k]) && !c.is_subset_of(l[k]))
          return Verdict::fail("I=" + render_ideal(l[i]) + " K=" + render_ideal(l[k]) + " C(I)=" + render_ideal(c));
    }
    return {};
  }
  if (id == "C1.9") {
    for (std::size_t i = 0; i < n; ++i) {
      const bool def = definitionally_subtractive(l[i]);
      const bool fixed = closure(i) == l[i];
      if (def != fixed) return Verdict::fail(render_ideal(l[i]));
    }
    return {};
  }
  if (id == "C2") {
    const auto v = check_galois(l);
    if (!v.holds)
      return Verdict::fail("I=" + render_ideal(l[v.witness->first]) + " K=" + render_ideal(l[v.witness->second]));
    return {};
  }
  if (id == "C3") {
    const auto sub = l.subtractive_indices();
    for (std::size_t a = 0; a < sub.size(); ++a) {
      dl.check();
      for (std::size_t b = a; b < sub.size(); ++b) {
        const Ideal& i = l[sub[a]];
        const Ideal& j = l[sub[b]];
        const Ideal prod = ideal_product(i, j);
        const std::string pair = "I=" + render_ideal(i) + " J=" + render_ideal(j) + " IJ=" + render_ideal(prod);
        if (!prod.members().is_subset_of(i.members() & j.members())) return Verdict::fail(pair + " not in I∩J");
        if (auto w = subtractivity_witness(prod))
          return Verdict::fail(pair + " x=" + s.label(w->first) + " y=" + s.label(w->second));
      }
    }
    return {};
  }
  if (id == "C6") {
    const auto v = is_modular(l, true);
    if (!v.holds) {
      const auto& [a, b, c] = *v.witness;
      return Verdict::fail("A=" + render_ideal(l[a]) + " B=" + render_ideal(l[b]) + " C=" + render_ideal(l[c]));
    }
    return {};
  }
  if (id == "C7") {
    for (std::size_t i = 0; i < n; ++i) {
      const Ideal rad = radical(l[i]);
      const Ideal c_rad = subtractive_closure(rad);
      if (!closure(i).is_subset_of(c_rad))
        return Verdict::fail("I=" + render_ideal(l[i]) + " √I=" + render_ideal(rad) + " C(√I)=" + render_ideal(c_rad));
    }
    return {};
  }

  // -- topology ----------------------------------------------------------
  const Semantics semantics = *sem;
  const auto& space = ctx.space(semantics);

  if (id == "C8") {
    const auto sub = l.subtractive_indices();
    // the names C(I) are exactly the subtractive ideals
    std::vector<bool> named(n, false);
    for (std::size_t i = 0; i < n; ++i) named[l.closure_index(i)] = true;
    for (std::size_t i = 0; i < n; ++i)
      if (named[i] != l.is_subtractive(i))
        return Verdict::fail(point_name(l, i) + (named[i] ? " named but not subtractive" : " subtractive but unnamed"));
    if (space.subbasis().size() != sub.size())
      return Verdict::fail(std::to_string(space.subbasis().size()) + " subbasic sets for " +
                           std::to_string(sub.size()) + " subtractive ideals");
    for (std::size_t k : sub) {
      PointSet expected(n);
      if (semantics == Semantics::DownSet) {
        for (std::size_t j = 0; j < n; ++j)
          if (l[j].is_subset_of(l[k])) expected.insert(j);
      } else {
        expected.insert(k);
      }
      if (!(space.subbasis()[space.subbasis_index(k)] == expected))
        return Verdict::fail("subbasic set of " + point_name(l, k) + " is " +
                             render_points(space.subbasis()[space.subbasis_index(k)]));
    }
    return {};
  }
  if (id == "C9") {
    const auto v = is_T0(space);
    if (!v.holds) {
      const auto [p, q] = *v.witness;
      return Verdict::fail(point_name(l, p) + " " + point_name(l, q) + " cl=" + render_points(space.point_closure(p)));
    }
    return {};
  }
  if (id == "C11") {
    const auto v = is_T1_subspace(space, space.subtractive_points());
    if (!v.holds)
      return Verdict::fail("not T1 at " + point_name(l, *v.witness) + " cl=" + render_points(space.point_closure(*v.witness)));
    for (const auto& [q, ok] : v.extensions)
      if (ok) return Verdict::fail("not maximal: adding " + point_name(l, q) + " stays T1");
    return {};
  }
  if (id == "X3") {
    const auto& fam = ctx.family(semantics);
    for (std::size_t p = 0; p < n; ++p) {
      dl.check();
      const PointSet& via_subbasis = space.point_closure(p);
      const PointSet& via_family = fam.minimal_superset(p);
      if (!(via_subbasis == via_family))
        return Verdict::fail(point_name(l, p) + " subbasis " + render_points(via_subbasis) + " family " +
                             render_points(via_family));
      if (semantics == Semantics::DownSet) {
        PointSet down(n);
        for (std::size_t j = 0; j < n; ++j)
          if (l[j].is_subset_of(closure(p))) down.insert(j);
        if (!(down == via_subbasis)) return Verdict::fail(point_name(l, p) + " cl != {J ⊆ C(I)}");
      }
    }
    for (const auto& d : fam.sets()) {
      dl.check();
      if (!space.is_closed(d)) return Verdict::fail(render_points(d) + " in family but not closed under point closures");
    }
    return {};
  }
  const auto& fam = ctx.family(semantics);
  if (id == "C10") {
    for (const auto& b : space.subbasis()) {
      dl.check();
      if (b.empty()) continue;
      if (auto cover = reducible_cover(fam, b))
        return Verdict::fail(render_points(b) + " = " + render_points(cover->first) + " ∪ " + render_points(cover->second));
    }
    return {};
  }
  if (id == "C12") {
    for (const auto& d : fam.sets()) {
      dl.check();
      if (!is_irreducible(fam, d)) continue;
      const auto g = generic_points(space, d);
      if (g.size() != 1) {
        std::string w = "D=" + render_points(d) + " generic={";
        for (std::size_t i = 0; i < g.size(); ++i) w += (i ? ",P" : "P") + std::to_string(g[i]);
        return Verdict::fail(w + "}");
      }
    }
    return {};
  }
  throw std::logic_error("no finite evaluator for claim " + std::string(id));
}

// -- homomorphism claims --------------------------------------------------

Verdict eval_homomorphism(std::string_view id, const Homomorphism& phi, const Context& src, const Context& tgt,
                          std::optional<Semantics> sem) {
  const auto& s = phi.source();
  if (id == "C13") {
    const ElementSet ker = phi.kernel();
    if (!is_ideal(s, ker)) return Verdict::fail("phi=" + phi.render() + " ker not an ideal");
    if (!definitionally_subtractive(Ideal::from_members(s, ker)))
      return Verdict::fail("phi=" + phi.render() + " ker=" + render_elements(s, ker) + " not subtractive");
    const auto& lt = tgt.ideals();
    for (std::size_t j : lt.subtractive_indices()) {
      const ElementSet pre = phi.preimage(lt[j].members());
      const std::string w = "phi=" + phi.render() + " J=" + render_ideal(lt[j]) + " pre=" + render_elements(s, pre);
      if (!is_ideal(s, pre)) return Verdict::fail(w + " not an ideal");
      const Ideal pi = Ideal::from_members(s, pre);
      if (!definitionally_subtractive(pi)) return Verdict::fail(w + " not subtractive");
      if (!(subtractive_closure(pi) == pi)) return Verdict::fail(w + " not a closure fixpoint");
    }
    return {};
  }
  const Semantics semantics = *sem;
  const auto& ss = src.space(semantics);
  const auto& ts = tgt.space(semantics);
  const auto& fs = src.family(semantics);
  if (id == "C14") {
    const auto m = induced_map(phi, ss, ts, &fs);
    if (!m.continuous)
      return Verdict::fail("phi=" + phi.render() + " preimage of closed " + render_points(*m.continuity_witness) +
                           " not closed");
    return {};
  }
  if (id == "X4") {
    const auto m = induced_map(phi, ss, ts, &fs);
    if (m.continuous != m.continuous_on_subbasis || m.continuous != m.continuous_by_closures)
      return Verdict::fail("phi=" + phi.render() + " family=" + std::to_string(m.continuous) + " subbasis=" +
                           std::to_string(m.continuous_on_subbasis) + " closures=" +
                           std::to_string(m.continuous_by_closures));
    return {};
  }
  if (id == "C15") {
    const auto v = is_homeomorphism_on_subtractive(phi, ss, ts, fs, tgt.family(semantics));
    if (!v.holds()) {
      std::string w = "phi=" + phi.render();
      for (const auto& x : v.witnesses) w += "; " + x;
      return Verdict::fail(w);
    }
    return {};
  }
  throw std::logic_error("no homomorphism evaluator for claim " + std::string(id));
}

// -- ℕ backend ------------------------------------------------------------

std::string short_name(const NatIdeal& i) {
  std::string out = "<";
  for (std::size_t k = 0; k < i.generators().size(); ++k) out += (k ? "," : "") + std::to_string(i.generators()[k]);
  return out + ">";
}

std::vector<NatIdeal> natural_family() {
  return {nat_ideal({}), nat_ideal({1}), nat_ideal({2}), nat_ideal({3}), nat_ideal({2, 3}), nat_ideal({4, 6})};
}

bool nat_def_subtractive(const NatIdeal& i) { return !nat_subtractivity_witness(i).has_value(); }

Verdict eval_natural(std::string_view id) {
  const auto fam = natural_family();
  const std::size_t n = fam.size();
  std::vector<NatIdeal> closures;
  for (const auto& i : fam) closures.push_back(nat_subtractive_closure(i));

  if (id == "C1.1") {
    for (std::size_t i = 0; i < n; ++i)
      if (!nat_subset(fam[i], closures[i])) return Verdict::fail(short_name(fam[i]));
    return {};
  }
  if (id == "C1.2") {
    const auto c = nat_subtractive_closure(nat_ideal({}));
    return c.is_zero() ? Verdict{} : Verdict::fail("C(0)=" + short_name(c));
  }
  if (id == "C1.3") {
    const auto c = nat_subtractive_closure(nat_ideal({1}));
    return c == nat_ideal({1}) ? Verdict{} : Verdict::fail("C(N)=" + short_name(c));
  }
  if (id == "C1.4") {
    for (std::size_t i = 0; i < n; ++i)
      if (!(nat_subtractive_closure(closures[i]) == closures[i])) return Verdict::fail(short_name(fam[i]));
    return {};
  }
  if (id == "C1.5") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (nat_subset(fam[i], fam[j]) && !nat_subset(closures[i], closures[j]))
          return Verdict::fail("I=" + short_name(fam[i]) + " J=" + short_name(fam[j]));
    return {};
  }
  if (id == "C1.6") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        const auto c = nat_subtractive_closure(nat_sum(fam[i], fam[j]));
        if (!nat_subset(closures[i], c) || !nat_subset(closures[j], c))
          return Verdict::fail("I=" + short_name(fam[i]) + " J=" + short_name(fam[j]));
      }
    return {};
  }
  if (id == "C1.7" || id == "C4") {
    const bool sub_only = id == "C4";
    std::vector<std::size_t> pool;
    for (std::size_t i = 0; i < n; ++i)
      if (!sub_only || nat_def_subtractive(fam[i])) pool.push_back(i);
    auto check = [&](const std::vector<std::size_t>& idx) -> std::optional<Verdict> {
      std::vector<NatIdeal> members, cls;
      std::string w = "family";
      for (auto i : idx) {
        members.push_back(fam[i]);
        cls.push_back(closures[i]);
        w += " " + short_name(fam[i]);
      }
      const auto meet = nat_intersection(members);
      if (sub_only) {
        if (!nat_def_subtractive(meet)) return Verdict::fail(w);
      } else if (!(nat_subtractive_closure(meet) == nat_intersection(cls))) {
        return Verdict::fail(w);
      }
      return std::nullopt;
    };
    for (std::size_t a = 0; a < pool.size(); ++a) {
      if (auto v = check({pool[a]})) return *v;
      for (std::size_t b = a + 1; b < pool.size(); ++b) {
        if (auto v = check({pool[a], pool[b]})) return *v;
        for (std::size_t c = b + 1; c < pool.size(); ++c)
          if (auto v = check({pool[a], pool[b], pool[c]})) return *v;
      }
    }
    if (!pool.empty())
      if (auto v = check(pool)) return *v;
    return {};
  }
  if (id == "C1.8") {
    for (std::size_t i = 0; i < n; ++i) {
      if (!nat_def_subtractive(closures[i]) || !nat_subset(fam[i], closures[i]))
        return Verdict::fail("C(" + short_name(fam[i]) + ")");
      for (std::size_t k = 0; k < n; ++k)
        if (nat_def_subtractive(fam[k]) && nat_subset(fam[i], fam[k]) && !nat_subset(closures[i], fam[k]))
          return Verdict::fail("I=" + short_name(fam[i]) + " K=" + short_name(fam[k]));
    }
    return {};
  }
  if (id == "C1.9" || id == "X2") {
    for (std::size_t i = 0; i < n; ++i)
      if (nat_def_subtractive(fam[i]) != (closures[i] == fam[i])) return Verdict::fail(short_name(fam[i]));
    return {};
  }
  if (id == "C2") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        if (!nat_def_subtractive(fam[k])) continue;
        if (nat_subset(closures[i], fam[k]) != nat_subset(fam[i], fam[k]))
          return Verdict::fail("I=" + short_name(fam[i]) + " K=" + short_name(fam[k]));
      }
    return {};
  }
  if (id == "C3") {
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i; j < n; ++j) {
        if (!nat_def_subtractive(fam[i]) || !nat_def_subtractive(fam[j])) continue;
        const auto prod = nat_product(fam[i], fam[j]);
        const NatIdeal pair[] = {fam[i], fam[j]};
        if (!nat_subset(prod, nat_intersection(pair)) || !nat_def_subtractive(prod))
          return Verdict::fail("I=" + short_name(fam[i]) + " J=" + short_name(fam[j]) + " IJ=" + short_name(prod));
      }
    return {};
  }
  if (id == "C5") {
    const auto two = nat_ideal({2});
    const auto three = nat_ideal({3});
    const auto sum = nat_sum(two, three);
    if (!nat_def_subtractive(two) || !nat_def_subtractive(three))
      return Verdict::fail("<2> or <3> not subtractive");
    const auto w = nat_subtractivity_witness(sum);
    if (!w) return Verdict::fail("<2>+<3>=" + sum.render() + " is subtractive");
    // holds: the counterexample is reproduced; record it for the report
    return {true, "I=<2> J=<3> I+J=" + sum.render() + " x=" + std::to_string(w->first) +
                      " y=" + std::to_string(w->second)};
  }
  if (id == "C7") {
    for (std::size_t i = 0; i < n; ++i) {
      const auto rad = nat_radical(fam[i]);
      if (!nat_subset(closures[i], nat_subtractive_closure(rad)))
        return Verdict::fail("I=" + short_name(fam[i]) + " √I=" + short_name(rad));
    }
    return {};
  }
  throw std::logic_error("no natural evaluator for claim " + std::string(id));
}

// -- task plumbing ----------------------------------------------------------

std::size_t claim_order(const Claim& c) {
  for (std::size_t i = 0; i < std::size(kClaims); ++i)
    if (kClaims[i].id == c.id) return i;
  for (std::size_t i = 0; i < std::size(kInternal); ++i)
    if (kInternal[i].id == c.id) return std::size(kClaims) + i;
  return ~std::size_t{0};
}

bool applicable_finite(const Claim& c, const FiniteSemiring& s) {
  if (!c.on_finite || c.scope == ClaimScope::PerHomomorphism) return false;
  if (c.id == "X1" && s.order() > kBruteForceOrder) return false;
  return true;
}

template <class F>
ClaimReport timed(const Claim& claim, std::string structure, std::optional<Semantics> sem, F&& body) {
  ClaimReport r;
  r.claim_id = std::string(claim.id);
  r.structure = std::move(structure);
  r.semantics = sem;
  r.claim_order = claim_order(claim);
  const auto start = std::chrono::steady_clock::now();
  try {
    Verdict v = body();
    r.result = v.holds ? Outcome::Holds : Outcome::Fails;
    r.witness = std::move(v.witness);
  } catch (const Unavailable& u) {
    r.result = Outcome::Cap;
    r.witness = u.reason;
  } catch (const CapExceeded& e) {
    r.result = Outcome::Cap;
    r.witness = e.what();
  } catch (const BudgetExceeded& e) {
    r.result = Outcome::Cap;
    r.witness = e.what();
  } catch (const std::exception& e) {
    r.result = Outcome::Fails;
    r.witness = std::string("internal error: ") + e.what();
  }
  r.elapsed = std::chrono::duration_cast<std::chrono::microseconds>(std::chrono::steady_clock::now() - start);
  return r;
}

void require_semantics(const Claim& claim, std::optional<Semantics> sem) {
  if (claim.semantics_dependent != sem.has_value())
    throw InvalidParam("claim " + std::string(claim.id) +
                       (claim.semantics_dependent ? " needs a semantics" : " does not take a semantics"));
}

ClaimReport run_with_context(const Claim& claim, const Context& ctx, std::optional<Semantics> sem,
                             const CheckLimits& limits) {
  return timed(claim, ctx.semiring.name(), sem, [&] {
    Deadline dl(limits.budget);
    return eval_finite(claim.id, ctx, sem, dl);
  });
}

std::optional<ClaimReport> run_pair_with_context(const Claim& claim, const std::vector<Homomorphism>& homs,
                                                 const Context& src, const Context& tgt,
                                                 std::optional<Semantics> sem, const CheckLimits& limits) {
  const bool surjective_only = claim.id == "C15";
  if (std::none_of(homs.begin(), homs.end(),
                   [&](const Homomorphism& h) { return !surjective_only || h.is_surjective(); }))
    return std::nullopt;
  return timed(claim, src.semiring.name() + "->" + tgt.semiring.name(), sem, [&] {
    Deadline dl(limits.budget);
    for (std::size_t k = 0; k < homs.size(); ++k) {
      if (surjective_only && !homs[k].is_surjective()) continue;
      dl.check();
      Verdict v = eval_homomorphism(claim.id, homs[k], src, tgt, sem);
      if (!v.holds) {
        v.witness = "#" + std::to_string(k) + " " + v.witness;
        return v;
      }
    }
    return Verdict{};
  });
}

template <class Task>
void run_parallel(std::vector<Task>& tasks, unsigned jobs) {
  if (jobs <= 1 || tasks.size() <= 1) {
    for (auto& t : tasks) t();
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  const unsigned count = std::min<std::size_t>(jobs, tasks.size());
  for (unsigned w = 0; w < count; ++w)
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) tasks[i]();
    });
  for (auto& t : pool) t.join();
}

}  // namespace

std::span<const Claim> claim_registry() { return kClaims; }
std::span<const Claim> internal_checks() { return kInternal; }

const Claim* find_claim(std::string_view id) {
  for (const auto& c : kClaims)
    if (c.id == id) return &c;
  for (const auto& c : kInternal)
    if (c.id == id) return &c;
  return nullptr;
}

std::string_view to_string(Outcome o) {
  switch (o) {
    case Outcome::Holds: return "holds";
    case Outcome::Fails: return "fails";
    case Outcome::Cap: return "cap";
  }
  return "?";
}

std::string render_report_line(const ClaimReport& r) {
  std::string line = "CLAIM " + r.claim_id + " STRUCT " + r.structure + " SEM " +
                     std::string(r.semantics ? to_string(*r.semantics) : "na") + " RESULT " +
                     std::string(to_string(r.result));
  if (!r.witness.empty()) line += " WITNESS " + r.witness;
  return line;
}

ClaimReport run_claim(const Claim& claim, const FiniteSemiring& s, std::optional<Semantics> semantics,
                      const CheckLimits& limits) {
  require_semantics(claim, semantics);
  if (!applicable_finite(claim, s))
    throw InvalidParam("claim " + std::string(claim.id) + " does not apply to " + s.name());
  std::vector<Semantics> sems;
  if (semantics) sems.push_back(*semantics);
  const Context ctx = make_context(s, limits, sems);
  return run_with_context(claim, ctx, semantics, limits);
}

std::optional<ClaimReport> run_homomorphism_claim(const Claim& claim, const FiniteSemiring& source,
                                                  const FiniteSemiring& target, std::optional<Semantics> semantics,
                                                  const CheckLimits& limits) {
  require_semantics(claim, semantics);
  if (claim.scope != ClaimScope::PerHomomorphism)
    throw InvalidParam("claim " + std::string(claim.id) + " is not a homomorphism claim");
  std::vector<Semantics> sems;
  if (semantics) sems.push_back(*semantics);
  const Context src = make_context(source, limits, sems);
  const Context tgt = make_context(target, limits, sems);
  return run_pair_with_context(claim, enumerate_homomorphisms(source, target), src, tgt, semantics, limits);
}

ClaimReport run_natural_claim(const Claim& claim) {
  if (!claim.on_natural) throw InvalidParam("claim " + std::string(claim.id) + " does not run on N");
  return timed(claim, std::string(kNaturalStructure), std::nullopt, [&] { return eval_natural(claim.id); });
}

int Report::exit_code(bool strict) const {
  if (must_hold_failures > 0) return 1;
  if (strict && caps > 0) return 3;
  return 0;
}

std::string Report::render() const {
  std::ostringstream os;
  for (const auto& e : entries) os << render_report_line(e) << '\n';
  os << "# summary: reports=" << entries.size() << " holds=" << holds << " fails=" << fails << " cap=" << caps
     << " must_hold_failures=" << must_hold_failures << '\n';
  return os.str();
}

Report run_suite(const Corpus& corpus, const SuiteOptions& options) {
  std::vector<const Claim*> selected;
  auto select_all = [&](std::span<const Claim> cs) {
    for (const auto& c : cs) selected.push_back(&c);
  };
  if (options.claims.empty()) {
    select_all(kClaims);
    if (options.include_internal) select_all(kInternal);
  } else {
    for (const auto& id : options.claims) {
      const Claim* c = find_claim(id);
      if (c == nullptr) throw InvalidParam("unknown claim id '" + id + "'");
      if (std::find(selected.begin(), selected.end(), c) == selected.end()) selected.push_back(c);
    }
  }
  std::vector<Semantics> sems = options.semantics;
  std::sort(sems.begin(), sems.end());
  sems.erase(std::unique(sems.begin(), sems.end()), sems.end());

  const auto& structures = corpus.structures;
  const std::size_t count = structures.size();
  std::vector<std::optional<Context>> contexts(count);
  {
    std::vector<std::function<void()>> build;
    for (std::size_t i = 0; i < count; ++i)
      build.emplace_back([&, i] { contexts[i].emplace(make_context(structures[i], options.limits, sems)); });
    run_parallel(build, options.jobs);
  }

  const bool any_hom = std::any_of(selected.begin(), selected.end(),
                                   [](const Claim* c) { return c->scope == ClaimScope::PerHomomorphism; });
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Homomorphism>> homs;
  if (any_hom)
    for (std::size_t i = 0; i < count; ++i)
      for (std::size_t j = 0; j < count; ++j) homs.emplace(std::pair{i, j}, enumerate_homomorphisms(structures[i], structures[j]));

  std::vector<std::optional<ClaimReport>> results;
  std::vector<std::function<void()>> tasks;
  auto add_task = [&](auto fn, std::size_t corpus_index, std::size_t partner) {
    const std::size_t slot = results.size();
    results.emplace_back();
    tasks.emplace_back([&results, slot, fn, corpus_index, partner] {
      auto r = fn();
      if (r) {
        r->corpus_index = corpus_index;
        r->partner_index = partner;
      }
      results[slot] = std::move(r);
    });
  };
  const std::vector<std::optional<Semantics>> no_sem{std::nullopt};
  std::vector<std::optional<Semantics>> with_sem(sems.begin(), sems.end());

  for (std::size_t i = 0; i < count; ++i)
    for (const Claim* c : selected) {
      const auto& variants = c->semantics_dependent ? with_sem : no_sem;
      if (c->scope == ClaimScope::PerHomomorphism) {
        if (!c->on_finite) continue;
        for (std::size_t j = 0; j < count; ++j) {
          const auto& hs = homs.at({i, j});
          if (hs.empty()) continue;
          for (auto sem : variants)
            add_task(
                [&, c, i, j, sem]() -> std::optional<ClaimReport> {
                  return run_pair_with_context(*c, homs.at({i, j}), *contexts[i], *contexts[j], sem, options.limits);
                },
                i, j);
        }
      } else if (applicable_finite(*c, structures[i])) {
        for (auto sem : variants)
          add_task([&, c, i, sem]() -> std::optional<ClaimReport> {
            return run_with_context(*c, *contexts[i], sem, options.limits);
          }, i, 0);
      }
    }
  if (options.include_natural)
    for (const Claim* c : selected)
      if (c->on_natural)
        add_task([c]() -> std::optional<ClaimReport> { return run_natural_claim(*c); }, count, 0);

  run_parallel(tasks, options.jobs);

  Report report;
  for (auto& r : results)
    if (r) report.entries.push_back(std::move(*r));
  std::stable_sort(report.entries.begin(), report.entries.end(), [](const ClaimReport& a, const ClaimReport& b) {
    auto key = [](const ClaimReport& r) {
      return std::tuple{r.corpus_index, r.claim_order, r.partner_index, r.semantics ? static_cast<int>(*r.semantics) : -1};
    };
    return key(a) < key(b);
  });
  for (const auto& e : report.entries) {
    switch (e.result) {
      case Outcome::Holds: ++report.holds; break;
      case Outcome::Fails: ++report.fails; break;
      case Outcome::Cap: ++report.caps; break;
    }
    if (e.result == Outcome::Fails && find_claim(e.claim_id)->policy == ClaimPolicy::MustHold)
      ++report.must_hold_failures;
  }
  return report;
}

}  // namespace subtractive
