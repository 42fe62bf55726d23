// Acceptance gate: one PASS/FAIL line per criterion.
// Usage: acceptance [criterion ...]   (default: all)

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "subtractive/claims.hpp"
#include "subtractive/nat_ideal.hpp"
#include "subtractive/search.hpp"

using namespace subtractive;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;
  std::function<Verdict()> run;
};

const Corpus& corpus() {
  static const Corpus c = standard_corpus(3);
  return c;
}

/// Runs the selected claims over the corpus and summarizes holds/fails.
Verdict claims_hold(const std::vector<std::string>& ids, const std::vector<Semantics>& sems = {}) {
  SuiteOptions opt;
  opt.claims = ids;
  if (!sems.empty()) opt.semantics = sems;
  const Report r = run_suite(corpus(), opt);
  Verdict v;
  v.pass = r.fails == 0 && r.caps == 0 && !r.entries.empty();
  v.detail = std::to_string(r.entries.size()) + " reports, " + std::to_string(r.fails) + " fails, " +
             std::to_string(r.caps) + " cap";
  for (const auto& e : r.entries)
    if (e.result != Outcome::Holds) {
      v.detail += "; first: " + render_report_line(e);
      break;
    }
  return v;
}

Verdict closure_laws() {
  return claims_hold({"C1.1", "C1.2", "C1.3", "C1.4", "C1.5", "C1.6", "C1.7", "C1.8", "C1.9"});
}

Verdict galois_and_intersections() { return claims_hold({"C2", "C4"}); }

Verdict natural_counterexample() {
  Verdict v;
  const auto two = nat_ideal({2});
  const auto three = nat_ideal({3});
  const auto sum = nat_sum(two, three);
  if (!nat_is_subtractive(two) || !nat_is_subtractive(three)) return {false, "<2> or <3> not subtractive"};
  for (Natural n = 0; n <= 100; ++n)
    if (sum.contains(n) == (n == 1)) return {false, "membership of " + std::to_string(n) + " is wrong"};
  const auto w = nat_subtractivity_witness(sum);
  if (nat_is_subtractive(sum) || !w) return {false, "sum reported subtractive"};
  const auto [x, y] = *w;
  if (!sum.contains(x) || !sum.contains(x + y) || sum.contains(y)) return {false, "witness does not re-validate"};
  const auto c5 = run_natural_claim(*find_claim("C5"));
  if (c5.result != Outcome::Holds) return {false, render_report_line(c5)};
  v.detail = sum.render() + ", witness x=" + std::to_string(x) + " y=" + std::to_string(y);
  return v;
}

Verdict modularity() {
  SuiteOptions opt;
  opt.claims = {"C6"};
  const Report r = run_suite(corpus(), opt);
  Verdict v;
  std::size_t revalidated = 0;
  for (const auto& e : r.entries) {
    if (e.result == Outcome::Cap) v.pass = false;
    if (e.result != Outcome::Fails) continue;
    const auto again = run_claim(*find_claim("C6"), corpus().structures[e.corpus_index], std::nullopt);
    if (render_report_line(again) == render_report_line(e))
      ++revalidated;
    else
      v.pass = false;
  }
  v.detail = std::to_string(r.holds) + "/" + std::to_string(r.entries.size()) + " modular, " +
             std::to_string(r.fails) + " refuted (" + std::to_string(revalidated) + " re-validated)";
  return v;
}

Verdict topology_oracle() {
  Verdict v;
  std::size_t spaces = 0, points = 0;
  for (const auto& s : corpus().structures) {
    const auto l = enumerate_ideals(s);
    if (l.size() > 12) continue;
    for (auto sem : kAllSemantics) {
      const auto space = build_space(l, sem);
      const auto fam = closed_family(space);
      ++spaces;
      for (std::size_t p = 0; p < l.size(); ++p, ++points) {
        const PointSet* least = nullptr;
        for (const auto& c : fam.sets())
          if (c.contains(p) && (least == nullptr || c.is_subset_of(*least))) least = &c;
        if (least == nullptr || !(*least == space.point_closure(p)))
          return {false, s.name() + " " + std::string(to_string(sem)) + " P" + std::to_string(p)};
      }
    }
  }
  v.detail = std::to_string(spaces) + " spaces, " + std::to_string(points) + " points";
  return v;
}

Verdict s3_regression() {
  Corpus c;
  c.structures = {truncated_nat(2)};
  SuiteOptions opt;
  opt.claims = {"C9", "C11", "C12"};
  const Report r = run_suite(c, opt);
  const std::set<std::string> expected = {
      "CLAIM C9 STRUCT S3 SEM downset RESULT fails WITNESS P1={0,T} P2={0,1,T} cl={P0,P1,P2}",
      "CLAIM C11 STRUCT S3 SEM downset RESULT fails WITNESS not T1 at P2={0,1,T} cl={P0,P1,P2}",
      "CLAIM C12 STRUCT S3 SEM downset RESULT fails WITNESS D={P0,P1,P2} generic={P1,P2}",
      "CLAIM C9 STRUCT S3 SEM fixedpoint RESULT holds",
      "CLAIM C11 STRUCT S3 SEM fixedpoint RESULT holds",
      "CLAIM C12 STRUCT S3 SEM fixedpoint RESULT holds",
  };
  std::set<std::string> got;
  for (const auto& e : r.entries) got.insert(render_report_line(e));
  if (got != expected) {
    std::string d;
    for (const auto& g : got)
      if (!expected.contains(g)) d += "unexpected: " + g + "; ";
    return {false, d};
  }
  return {true, "6 frozen verdicts"};
}

Verdict homomorphisms() {
  std::size_t count = 0;
  for (const auto& a : corpus().structures)
    for (const auto& b : corpus().structures) count += enumerate_homomorphisms(a, b).size();
  Verdict lemma = claims_hold({"C13"});
  Verdict cont = claims_hold({"C14"});
  Verdict v;
  v.pass = lemma.pass && cont.pass;
  v.detail = std::to_string(count) + " homomorphisms; preimage/kernel: " + lemma.detail + " | continuity: " + cont.detail;
  return v;
}

Verdict generator_completeness() {
  std::vector<FiniteSemiring> valid;
  for (unsigned bits = 0; bits < 256; ++bits) {
    SemiringTables t{"c", {"0", "1"}, {{0, 0}, {0, 0}}, {{0, 0}, {0, 0}}, 0, 1};
    for (int k = 0; k < 4; ++k) {
      t.add[k / 2][k % 2] = (bits >> k) & 1U;
      t.mul[k / 2][k % 2] = (bits >> (k + 4)) & 1U;
    }
    if (axiom_failures(t).empty()) valid.push_back(validate_semiring(t));
  }
  std::vector<FiniteSemiring> classes;
  for (const auto& s : valid) {
    bool seen = false;
    for (const auto& c : classes) seen = seen || isomorphic(c, s);
    if (!seen) classes.push_back(s);
  }
  const auto found = search_semirings(2, true).structures;
  bool match = found.size() == classes.size();
  for (const auto& c : classes) {
    int hits = 0;
    for (const auto& f : found) hits += isomorphic(c, f);
    match = match && hits == 1;
  }
  return {match && classes.size() == 2, std::to_string(valid.size()) + " valid of 256, " +
                                             std::to_string(classes.size()) + " classes, search found " +
                                             std::to_string(found.size())};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> all = {
      {1, "closure laws C1.1-C1.9 on the order<=3 corpus", 10.0, closure_laws},
      {2, "Galois connection C2 and intersections C4", 10.0, galois_and_intersections},
      {3, "N counterexample <2>+<3> = N\\{1} not subtractive", 10.0, natural_counterexample},
      {4, "modularity C6 of the subtractive lattice", 10.0, modularity},
      {5, "point closure equals least closed superset", 10.0, topology_oracle},
      {6, "S3 topology verdicts", 1.0, s3_regression},
      {7, "homomorphisms: C13 preimages and C14 continuity", 60.0, homomorphisms},
      {8, "order-2 search equals the 2^8 brute force", 10.0, generator_completeness},
  };
  std::set<int> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::atoi(argv[i]));

  int failures = 0;
  for (const auto& c : all) {
    if (!selected.empty() && !selected.contains(c.id)) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.budget_seconds) {
      v.pass = false;
      v.detail += " (over " + std::to_string(c.budget_seconds) + " s budget)";
    }
    std::printf("%s %d %s (%.3f s): %s\n", v.pass ? "PASS" : "FAIL", c.id, c.title, secs, v.detail.c_str());
    failures += v.pass ? 0 : 1;
  }
  return failures == 0 ? 0 : 1;
}
