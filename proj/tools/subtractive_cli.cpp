#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "subtractive/claims.hpp"
#include "subtractive/nat_ideal.hpp"
#include "subtractive/search.hpp"
#include "subtractive/topology.hpp"

namespace {

using namespace subtractive;

constexpr int kExitInput = 2;

/// A path, "-" for stdin, or "builtin:<family>[:param]".
std::vector<FiniteSemiring> load(const std::string& source) {
  if (source.rfind("builtin:", 0) == 0) return {builtin_from_spec(source.substr(8))};
  std::stringstream buf;
  if (source == "-") {
    buf << std::cin.rdbuf();
  } else {
    std::ifstream in(source);
    if (!in) throw Error("cannot open '" + source + "'");
    buf << in.rdbuf();
  }
  return parse_semirings(buf.str());
}

FiniteSemiring load_one(const std::string& source) {
  auto all = load(source);
  if (all.size() != 1) throw Error("'" + source + "' holds " + std::to_string(all.size()) + " semirings, expected 1");
  return all.front();
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_validate(const std::vector<std::string>& files) {
  int rc = 0;
  for (const auto& f : files) {
    try {
      for (const auto& s : load(f)) std::cout << "valid " << s.name() << " order " << s.order() << '\n';
    } catch (const AxiomViolation& e) {
      std::cout << "invalid " << f << '\n';
      for (const auto& fail : e.failures()) {
        std::cout << "  " << fail.axiom << ':';
        for (Element x : fail.witness) std::cout << ' ' << x;
        std::cout << '\n';
      }
      rc = kExitInput;
    }
  }
  return rc;
}

int cmd_ideals(const std::string& file, bool subtractive_only, std::size_t max_ideals) {
  for (const auto& s : load(file)) {
    IdealLimits limits;
    limits.max_ideals = max_ideals;
    const auto l = enumerate_ideals(s, limits);
    std::cout << "semiring " << s.name() << " ideals " << l.size() << " subtractive "
              << l.subtractive_indices().size() << '\n';
    for (std::size_t i = 0; i < l.size(); ++i) {
      if (subtractive_only && !l.is_subtractive(i)) continue;
      std::cout << "  P" << i << ' ' << render_ideal(l[i]);
      if (l.is_subtractive(i))
        std::cout << " subtractive";
      else
        std::cout << " closure P" << l.closure_index(i) << ' ' << render_ideal(l[l.closure_index(i)]);
      std::cout << '\n';
    }
  }
  return 0;
}

void print_closure(const Ideal& i) {
  const FiniteSemiring& s = i.parent();
  std::cout << "I = " << render_ideal(i) << '\n';
  std::cout << "C(I) = " << render_ideal(subtractive_closure(i)) << '\n';
  if (auto w = subtractivity_witness(i))
    std::cout << "subtractive: no (x=" << s.label(w->first) << ", y=" << s.label(w->second) << ")\n";
  else
    std::cout << "subtractive: yes\n";
}

void print_nat(const NatIdeal& i) {
  std::cout << "I = " << i.render() << '\n';
  std::cout << "C(I) = " << nat_subtractive_closure(i).render() << '\n';
  if (auto w = nat_subtractivity_witness(i))
    std::cout << "subtractive: no (x=" << w->first << ", y=" << w->second << ")\n";
  else
    std::cout << "subtractive: yes\n";
}

int cmd_closure(const std::string& file, const std::vector<std::string>& ideals,
                const std::vector<std::string>& nat_ideals) {
  if (ideals.empty() && nat_ideals.empty()) throw Error("closure needs --ideal or --nat-ideal");
  if (!ideals.empty()) {
    if (file.empty()) throw Error("--ideal needs a semiring file");
    const FiniteSemiring s = load_one(file);
    for (const auto& text : ideals) {
      const ElementSet seed = parse_element_labels(s, text);
      const Ideal i = generate_ideal(s, seed);
      if (!(i.members() == seed)) std::cout << "generated from " << render_elements(s, seed) << '\n';
      print_closure(i);
    }
  }
  std::vector<NatIdeal> parsed;
  for (const auto& text : nat_ideals) {
    parsed.push_back(parse_nat_ideal(text));
    print_nat(parsed.back());
  }
  if (parsed.size() == 2) {
    std::cout << "sum:\n";
    print_nat(nat_sum(parsed[0], parsed[1]));
  }
  return 0;
}

int cmd_topology(const std::string& file, const std::string& semantics_text, std::size_t max_closed) {
  const auto sem = parse_semantics(semantics_text);
  if (!sem) throw Error("unknown semantics '" + semantics_text + "'");
  TopologyLimits limits;
  limits.max_closed = max_closed;
  for (const auto& s : load(file)) {
    const auto l = enumerate_ideals(s);
    const auto space = build_space(l, *sem, limits);
    const std::size_t n = l.size();
    std::cout << "space " << s.name() << " semantics " << to_string(*sem) << " points " << n << '\n';
    std::cout << "points:\n";
    for (std::size_t p = 0; p < n; ++p)
      std::cout << "  P" << p << ' ' << render_ideal(l[p]) << (l.is_subtractive(p) ? " subtractive" : "") << '\n';
    std::cout << "subbasis:\n";
    for (const auto& b : space.subbasis()) std::cout << "  " << render_points(b) << '\n';
    std::cout << "closures:\n";
    for (std::size_t p = 0; p < n; ++p) std::cout << "  cl(P" << p << ") = " << render_points(space.point_closure(p)) << '\n';

    const auto t0 = is_T0(space);
    std::cout << "T0: " << yes_no(t0.holds);
    if (t0.witness) std::cout << " (P" << t0.witness->first << ", P" << t0.witness->second << ")";
    std::cout << '\n';
    const auto t1 = is_T1_subspace(space, space.subtractive_points());
    std::cout << "T1 on " << render_points(space.subtractive_points()) << ": " << yes_no(t1.holds);
    if (t1.witness) std::cout << " (P" << *t1.witness << " not isolated)";
    if (t1.holds) std::cout << (t1.maximal() ? ", maximal" : ", not maximal");
    std::cout << '\n';

    try {
      const auto fam = closed_family(space, max_closed);
      std::cout << "closed sets: " << fam.size() << '\n';
      std::cout << "irreducible closed sets:\n";
      for (const auto& c : irreducible_closed_sets(space, fam)) {
        if (!c.irreducible.value_or(false)) continue;
        std::cout << "  " << render_points(c.members) << " generic";
        const auto& g = c.generic_points.value();
        if (g.empty()) std::cout << " none";
        for (std::size_t i = 0; i < g.size(); ++i) std::cout << (i ? ",P" : " P") << g[i];
        std::cout << '\n';
      }
    } catch (const CapExceeded& e) {
      std::cout << "closed sets: cap (" << e.what() << ")\n";
    }
  }
  return 0;
}

struct CheckArgs {
  std::vector<std::string> files;
  std::optional<std::size_t> search_order;
  bool canonical = false;
  std::string claims = "all";
  std::string semantics = "both";
  bool strict = false;
  unsigned jobs = 1;
  bool natural = false;
  bool no_natural = false;
  bool no_internal = false;
  std::size_t max_ideals = 4096;
  std::size_t max_closed = 100000;
  long budget_ms = 10000;
};

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string tok; std::getline(ss, tok, ',');)
    if (!tok.empty()) out.push_back(tok);
  return out;
}

int cmd_check(const CheckArgs& a) {
  Corpus corpus;
  bool natural = a.natural;
  if (!a.files.empty()) {
    for (const auto& f : a.files)
      for (auto& s : load(f)) corpus.structures.push_back(std::move(s));
  }
  if (a.search_order) {
    auto found = search_semirings(*a.search_order, a.canonical);
    corpus.structures.insert(corpus.structures.end(), found.structures.begin(), found.structures.end());
  }
  if (a.files.empty() && !a.search_order) {
    corpus = standard_corpus(3);
    natural = true;
  }
  if (a.no_natural) natural = false;

  SuiteOptions opt;
  if (a.claims != "all") opt.claims = split_ids(a.claims);
  if (a.semantics == "both") {
    opt.semantics = {Semantics::DownSet, Semantics::FixedPoint};
  } else if (auto sem = parse_semantics(a.semantics)) {
    opt.semantics = {*sem};
  } else {
    throw Error("unknown semantics '" + a.semantics + "'");
  }
  opt.include_natural = natural;
  opt.include_internal = !a.no_internal;
  opt.jobs = std::max(1u, a.jobs);
  opt.limits.ideals.max_ideals = a.max_ideals;
  opt.limits.topology.max_closed = a.max_closed;
  opt.limits.budget = std::chrono::milliseconds(a.budget_ms);

  const Report report = run_suite(corpus, opt);
  std::cout << report.render();
  return report.exit_code(a.strict);
}

int cmd_search(std::size_t order, bool canonical, std::optional<std::size_t> limit) {
  const Corpus c = search_semirings(order, canonical, limit);
  std::cout << "# search order " << order << " canonical " << yes_no(canonical) << " count " << c.structures.size()
            << (c.limit_reached ? " limit-reached" : "") << '\n';
  for (const auto& s : c.structures) std::cout << '\n' << render_semiring(s);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Subtractive ideals and subtractive topology of finite commutative semirings"};
  app.require_subcommand(1);

  std::vector<std::string> validate_files;
  auto* validate = app.add_subcommand("validate", "Parse and validate semiring files");
  validate->add_option("files", validate_files, "Semiring files")->required();

  std::string file;
  bool subtractive_only = false;
  std::size_t max_ideals = 4096;
  auto* ideals = app.add_subcommand("ideals", "List all ideals with subtractive closures");
  ideals->add_option("file", file, "Semiring file")->required();
  ideals->add_flag("--subtractive-only", subtractive_only, "Only list subtractive ideals");
  ideals->add_option("--max-ideals", max_ideals, "Ideal count cap");

  std::vector<std::string> ideal_labels, nat_ideals;
  auto* closure = app.add_subcommand("closure", "Subtractive closure of an ideal");
  closure->add_option("file", file, "Semiring file");
  closure->add_option("--ideal", ideal_labels, "Comma-separated element labels");
  closure->add_option("--nat-ideal", nat_ideals, "Generators of an ideal of N, e.g. 2,3");

  std::string semantics = "downset";
  std::size_t max_closed = 100000;
  auto* topology = app.add_subcommand("topology", "Subtractive topology on the ideals");
  topology->add_option("file", file, "Semiring file")->required();
  topology->add_option("--semantics", semantics, "downset or fixedpoint")->check(CLI::IsMember({"downset", "fixedpoint"}));
  topology->add_option("--max-closed", max_closed, "Closed family cap");

  CheckArgs ca;
  auto* check = app.add_subcommand("check", "Run the claim suite");
  check->add_option("files", ca.files, "Semiring files");
  check->add_option("--search-order", ca.search_order, "Add every semiring of this order");
  check->add_flag("--canonical", ca.canonical, "Keep one structure per isomorphism class");
  check->add_option("--claims", ca.claims, "all or a comma-separated id list");
  check->add_option("--semantics", ca.semantics, "both, downset or fixedpoint")
      ->check(CLI::IsMember({"both", "downset", "fixedpoint"}));
  check->add_flag("--strict", ca.strict, "Exit 3 when any check hits a cap");
  check->add_option("--jobs,-j", ca.jobs, "Worker threads");
  check->add_flag("--natural", ca.natural, "Also run the N backend claims");
  check->add_flag("--no-natural", ca.no_natural, "Skip the N backend claims");
  check->add_flag("--no-internal", ca.no_internal, "Skip internal cross-checks");
  check->add_option("--max-ideals", ca.max_ideals, "Ideal count cap");
  check->add_option("--max-closed", ca.max_closed, "Closed family cap");
  check->add_option("--budget-ms", ca.budget_ms, "Soft time budget per check");

  std::size_t order = 2;
  bool canonical = false;
  std::optional<std::size_t> limit;
  auto* search = app.add_subcommand("search", "Enumerate semirings of a given order");
  search->add_option("--order", order, "Number of elements")->required();
  search->add_flag("--canonical", canonical, "Keep one structure per isomorphism class");
  search->add_option("--limit", limit, "Stop after this many structures");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitInput;
  }

  try {
    if (*validate) return cmd_validate(validate_files);
    if (*ideals) return cmd_ideals(file, subtractive_only, max_ideals);
    if (*closure) return cmd_closure(file, ideal_labels, nat_ideals);
    if (*topology) return cmd_topology(file, semantics, max_closed);
    if (*check) return cmd_check(ca);
    if (*search) return cmd_search(order, canonical, limit);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitInput;
  } catch (const AxiomViolation& e) {
    std::cerr << "invalid semiring: " << e.what() << '\n';
    return kExitInput;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInput;
  }
  return 0;
}
