#include "slopegap/errors.hpp"
#include "slopegap/report.hpp"
#include "slopegap/verify.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>

namespace py = pybind11;
using namespace slopegap;

namespace {

std::vector<std::string> rationals(const std::vector<Rational>& v) {
  std::vector<std::string> out;
  for (const auto& q : v) out.push_back(to_string(q));
  return out;
}

// Keeps the regions alive alongside the distribution.
struct Distribution {
  AnalysisReport report;
  long double pdf(long double t) const { return report.pdf->pdf(t); }
  long double cdf(long double t) const { return report.pdf->cdf(t); }
};

}  // namespace

PYBIND11_MODULE(_slopegap, m) {
  m.doc() = "Slope gap distributions of square-tiled surfaces";

  static py::exception<Error> error(m, "SlopegapError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object kind = py::str(error_name(e.kind()));
      PyErr_SetObject(error.ptr(), py::make_tuple(py::str(e.what()), kind).ptr());
    }
  });

  py::class_<Origami>(m, "Origami")
      .def(py::init([](const std::string& text) { return Origami::parse(text); }), py::arg("text"))
      .def_property_readonly("size", &Origami::size)
      .def("canonical", [](const Origami& o) { return canonical_form(o); })
      .def("genus", [](const Origami& o) { return genus(o); })
      .def("cone_angles",
           [](const Origami& o) {
             std::vector<int> out;
             for (const auto& c : cone_points(o)) out.push_back(c.angle_turns);
             return out;
           })
      .def("is_holonomy", [](const Origami& o, std::int64_t x, std::int64_t y) { return is_holonomy(o, x, y); })
      .def("act", [](const Origami& o, const std::string& word) { return act_word(o, parse_word(word)); })
      .def("isomorphic", [](const Origami& a, const Origami& b) { return isomorphic(a, b); })
      .def("__str__", &Origami::to_string)
      .def("__repr__", [](const Origami& o) { return "Origami('" + o.to_string() + "')"; })
      .def(py::self == py::self);

  m.def("orbit_size", [](const std::string& text, std::size_t cap) {
    return orbit_graph(canonical_form(Origami::parse(text)), cap).index();
  }, py::arg("origami"), py::arg("orbit_cap") = default_orbit_cap);

  m.def("analyze_json", [](const std::string& text, std::size_t cap) {
    return to_json(analyze(Origami::parse(text), cap)).dump();
  }, py::arg("origami"), py::arg("orbit_cap") = default_orbit_cap);

  py::class_<Distribution>(m, "Distribution")
      .def(py::init([](const std::string& text, std::size_t cap) {
             py::gil_scoped_release release;
             return Distribution{analyze(Origami::parse(text), cap)};
           }),
           py::arg("origami"), py::arg("orbit_cap") = default_orbit_cap)
      .def("pdf", &Distribution::pdf, py::arg("t"))
      .def("cdf", &Distribution::cdf, py::arg("t"))
      .def_property_readonly("breakpoints", [](const Distribution& d) { return rationals(d.report.pdf->breakpoints()); })
      .def_property_readonly("total_area", [](const Distribution& d) { return to_string(d.report.transversal.total_area); })
      .def_property_readonly("index", [](const Distribution& d) { return d.report.orbit.index(); })
      .def_property_readonly("covolume", [](const Distribution& d) { return d.report.covolume.value; })
      .def_property_readonly("nonsmooth_set", [](const Distribution& d) { return rationals(d.report.signature.nonsmooth_set); })
      .def_property_readonly("closure_ok", [](const Distribution& d) { return d.report.signature.closure_ok; })
      .def_property_readonly("witness", [](const Distribution& d) -> std::optional<std::string> {
        if (!d.report.signature.witness) return std::nullopt;
        return to_string(*d.report.signature.witness);
      })
      .def("ks_distance", [](const Distribution& d, const std::vector<double>& gaps) {
        GapSample s;
        s.gaps = gaps;
        std::sort(s.gaps.begin(), s.gaps.end());
        return ks_distance(s, *d.report.pdf);
      }, py::arg("gaps"));

  m.def("hall_reference", [](long double t) {
    auto h = hall_reference(t);
    return std::make_pair(h.pdf, h.cdf);
  }, py::arg("t"));

  m.def("empirical_gaps", [](const std::string& text, std::int64_t R) {
    py::gil_scoped_release release;
    return empirical_gaps(Origami::parse(text), R).gaps;
  }, py::arg("origami"), py::arg("bound"));

  m.def("congruence_gaps_10tile", [](std::int64_t R) { return congruence_gaps_10tile(R).gaps; }, py::arg("bound"));

  m.def("verify", [](const std::string& text, std::size_t points, std::uint64_t seed) {
    VerifyOptions v;
    v.points_per_component = points;
    v.seed = seed;
    std::vector<CheckResult> results;
    {
      py::gil_scoped_release release;
      results = run_all_checks(Origami::parse(text), v);
    }
    py::list out;
    for (const auto& r : results) {
      py::dict d;
      d["check"] = r.check;
      d["status"] = r.pass ? "pass" : "fail";
      d["metric"] = r.metric;
      d["threshold"] = r.threshold ? py::object(py::float_(*r.threshold)) : py::none();
      out.append(d);
    }
    return out;
  }, py::arg("origami"), py::arg("points") = 200, py::arg("seed") = 1);

  py::module_ fx = m.def_submodule("fixtures");
  fx.attr("torus") = fixtures::torus;
  fx.attr("three_tile") = fixtures::three_tile;
  fx.attr("four_tile") = fixtures::four_tile;
  fx.attr("ten_tile") = fixtures::ten_tile;
}
