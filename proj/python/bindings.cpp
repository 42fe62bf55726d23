#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "subtractive/claims.hpp"
#include "subtractive/nat_ideal.hpp"
#include "subtractive/search.hpp"
#include "subtractive/topology.hpp"

namespace py = pybind11;
using namespace subtractive;

namespace {

Semantics semantics_arg(const std::string& text) {
  if (auto s = parse_semantics(text)) return *s;
  throw InvalidParam("unknown semantics '" + text + "'");
}

std::vector<std::string> labels_of(const FiniteSemiring& s, ElementSet e) {
  std::vector<std::string> out;
  e.for_each([&](Element x) { out.push_back(s.label(x)); });
  return out;
}

ElementSet elements_arg(const FiniteSemiring& s, const std::vector<std::string>& labels) {
  ElementSet out;
  for (const auto& l : labels) {
    auto e = s.find_label(l);
    if (!e) throw InvalidParam("unknown element label '" + l + "'");
    out.insert(*e);
  }
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Subtractive ideals and subtractive topology of finite commutative semirings";

  auto error = py::register_exception<Error>(m, "Error", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", error.ptr());
  py::register_exception<AxiomViolation>(m, "AxiomViolation", error.ptr());
  py::register_exception<CapExceeded>(m, "CapExceeded", error.ptr());

  py::class_<FiniteSemiring>(m, "FiniteSemiring")
      .def_property_readonly("name", &FiniteSemiring::name)
      .def_property_readonly("order", &FiniteSemiring::order)
      .def_property_readonly("labels", [](const FiniteSemiring& s) {
        return std::vector<std::string>(s.labels().begin(), s.labels().end());
      })
      .def_property_readonly("zero", &FiniteSemiring::zero)
      .def_property_readonly("one", &FiniteSemiring::one)
      .def("add", &FiniteSemiring::add)
      .def("mul", &FiniteSemiring::mul)
      .def("render", &render_semiring)
      .def("__eq__", [](const FiniteSemiring& a, const FiniteSemiring& b) { return a == b; })
      .def("__repr__", [](const FiniteSemiring& s) {
        return "<FiniteSemiring " + s.name() + " order " + std::to_string(s.order()) + ">";
      });

  m.def("parse_semiring", [](const std::string& text) { return parse_semiring(text); });
  m.def("parse_semirings", [](const std::string& text) { return parse_semirings(text); });
  m.def("builtin", [](const std::string& family, std::optional<unsigned> param) { return builtin(family, param); },
        py::arg("family"), py::arg("param") = py::none());
  m.def("builtin_from_spec", [](const std::string& spec) { return builtin_from_spec(spec); });

  py::class_<Ideal>(m, "Ideal")
      .def_property_readonly("members", [](const Ideal& i) { return labels_of(i.parent(), i.members()); })
      .def_property_readonly("elements", [](const Ideal& i) { return i.members().elements(); })
      .def("closure", &subtractive_closure)
      .def("is_subtractive", [](const Ideal& i) { return is_subtractive(i); })
      .def("witness",
           [](const Ideal& i) -> std::optional<std::pair<std::string, std::string>> {
             auto w = subtractivity_witness(i);
             if (!w) return std::nullopt;
             return std::pair{i.parent().label(w->first), i.parent().label(w->second)};
           })
      .def("__eq__", [](const Ideal& a, const Ideal& b) { return a == b; })
      .def("__repr__", &render_ideal);

  m.def("generate_ideal", [](const FiniteSemiring& s, const std::vector<std::string>& seed) {
    return generate_ideal(s, elements_arg(s, seed));
  });
  m.def("ideals", [](const FiniteSemiring& s) {
    const auto l = enumerate_ideals(s);
    return std::vector<Ideal>(l.ideals().begin(), l.ideals().end());
  });
  m.def("ideal_sum", &ideal_sum);
  m.def("ideal_product", &ideal_product);
  m.def("radical", &radical);

  py::class_<NatIdeal>(m, "NatIdeal")
      .def(py::init<std::vector<Natural>>(), py::arg("generators"))
      .def_property_readonly("generators", [](const NatIdeal& i) {
        return std::vector<Natural>(i.generators().begin(), i.generators().end());
      })
      .def_property_readonly("divisor", &NatIdeal::divisor)
      .def_property_readonly("bound", &NatIdeal::bound)
      .def("__contains__", &NatIdeal::contains)
      .def("closure", &nat_subtractive_closure)
      .def("is_subtractive", &nat_is_subtractive)
      .def("witness", &nat_subtractivity_witness)
      .def("__add__", &nat_sum)
      .def("__mul__", &nat_product)
      .def("__eq__", [](const NatIdeal& a, const NatIdeal& b) { return a == b; })
      .def("__repr__", &NatIdeal::render);

  py::class_<SubtractiveSpace>(m, "SubtractiveSpace")
      .def_property_readonly("point_count", &SubtractiveSpace::point_count)
      .def_property_readonly("subbasis", [](const SubtractiveSpace& sp) {
        std::vector<std::vector<std::size_t>> out;
        for (const auto& b : sp.subbasis()) out.push_back(b.points());
        return out;
      })
      .def("point_closure", [](const SubtractiveSpace& sp, std::size_t p) {
        if (p >= sp.point_count()) throw py::index_error("point out of range");
        return sp.point_closure(p).points();
      })
      .def("is_T0",
           [](const SubtractiveSpace& sp) -> std::pair<bool, std::optional<std::pair<std::size_t, std::size_t>>> {
             auto v = is_T0(sp);
             return {v.holds, v.witness};
           })
      .def("closed_sets", [](const SubtractiveSpace& sp, std::size_t cap) {
        const auto family = closed_family(sp, cap);
        std::vector<std::vector<std::size_t>> out;
        for (const auto& c : family.sets()) out.push_back(c.points());
        return out;
      }, py::arg("cap") = 100000);

  m.def("build_space", [](const FiniteSemiring& s, const std::string& semantics) {
    return build_space(enumerate_ideals(s), semantics_arg(semantics));
  }, py::arg("semiring"), py::arg("semantics") = "downset");

  m.def("homomorphisms", [](const FiniteSemiring& a, const FiniteSemiring& b) {
    std::vector<std::vector<Element>> out;
    for (const auto& h : enumerate_homomorphisms(a, b)) out.emplace_back(h.map().begin(), h.map().end());
    return out;
  });

  m.def("search", [](std::size_t order, bool canonical, std::optional<std::size_t> limit) {
    return search_semirings(order, canonical, limit).structures;
  }, py::arg("order"), py::arg("canonical") = true, py::arg("limit") = py::none());
  m.def("standard_corpus", [](std::size_t max_order) { return standard_corpus(max_order).structures; },
        py::arg("max_order") = 3);

  m.def("check",
        [](const std::vector<FiniteSemiring>& structures, const std::vector<std::string>& claims,
           const std::vector<std::string>& semantics, bool natural, unsigned jobs) {
          Corpus c;
          c.structures = structures;
          SuiteOptions opt;
          opt.claims = claims;
          opt.semantics.clear();
          for (const auto& s : semantics) opt.semantics.push_back(semantics_arg(s));
          opt.include_natural = natural;
          opt.jobs = jobs;
          Report r;
          {
            py::gil_scoped_release release;
            r = run_suite(c, opt);
          }
          std::vector<std::string> lines;
          for (const auto& e : r.entries) lines.push_back(render_report_line(e));
          return std::pair{lines, r.exit_code(false)};
        },
        py::arg("structures"), py::arg("claims") = std::vector<std::string>{},
        py::arg("semantics") = std::vector<std::string>{"downset", "fixedpoint"}, py::arg("natural") = false,
        py::arg("jobs") = 1);
}
