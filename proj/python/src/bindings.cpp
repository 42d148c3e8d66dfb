#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "weave/canonical.hpp"
#include "weave/cli.hpp"
#include "weave/diagram_io.hpp"
#include "weave/errors.hpp"
#include "weave/invariants.hpp"
#include "weave/moves.hpp"
#include "weave/tessellation.hpp"

namespace py = pybind11;
using namespace weave;

namespace {

// {key string: {exponent: coefficient}}
py::dict bracket_to_dict(const BracketValue& b) {
  py::dict out;
  for (const auto& [key, poly] : b) {
    py::dict terms;
    for (const auto& [e, c] : poly.terms()) terms[py::int_(e)] = c;
    out[py::str(format_key(key))] = terms;
  }
  return out;
}

BracketOptions options(int workers, int budget) {
  BracketOptions o;
  o.workers = workers;
  o.budget = budget;
  return o;
}

}  // namespace

PYBIND11_MODULE(_weave, m) {
  m.doc() = "Periodic weave diagrams on surfaces: invariants, moves and canonical forms.";

  auto base = py::register_exception<WeaveError>(m, "WeaveError");
  py::register_exception<ParseError>(m, "ParseError", base.ptr());
  py::register_exception<TooManyCrossings>(m, "TooManyCrossings", base.ptr());
  py::register_exception<IllegalMove>(m, "IllegalMove", base.ptr());
  py::register_exception<UnsupportedTiling>(m, "UnsupportedTiling", base.ptr());

  py::class_<SurfaceDiagram>(m, "Diagram")
      .def_static("parse", &parse_diagram, py::arg("text"))
      .def_static("read", &read_diagram_file, py::arg("path"))
      .def("format", &format_diagram, py::arg("with_tags") = false)
      .def_property_readonly("genus", &SurfaceDiagram::genus)
      .def_property_readonly("crossing_count", &SurfaceDiagram::crossing_count)
      .def_property_readonly("edge_count", &SurfaceDiagram::edge_count)
      .def("__eq__", [](const SurfaceDiagram& a, const SurfaceDiagram& b) { return a == b; })
      .def("__repr__", [](const SurfaceDiagram& d) {
        return "<Diagram genus=" + std::to_string(d.genus()) + " crossings=" + std::to_string(d.crossing_count()) + ">";
      });

  m.def("validate", [](const SurfaceDiagram& d) {
    const auto r = validate(d);
    return py::make_tuple(r.violations, r.advisories);
  });
  m.def("face_count", [](const SurfaceDiagram& d) { return faces(d).size(); });
  m.def("thread_homologies", [](const SurfaceDiagram& d) {
    std::vector<HomologyVector> out;
    for (const auto& t : threads(d)) out.push_back(t.homology);
    return out;
  });
  m.def("is_alternating", &is_alternating);
  m.def("is_proper", [](const SurfaceDiagram& d) { return is_proper(d).ok; });
  m.def("is_reduced", [](const SurfaceDiagram& d) { return is_reduced(d).ok; });
  m.def("isomorphic", &isomorphic);

  m.def("build", [](const std::string& tiling, const std::string& method, int mm, int scale, const std::string& seq) {
    return build_diagram({"", tiling, method, mm, scale, seq});
  }, py::arg("tiling"), py::arg("method"), py::arg("m") = 1, py::arg("scale") = 1, py::arg("seq") = "alt");

  m.def("bracket", [](const SurfaceDiagram& d, int workers, int budget) {
    return bracket_to_dict(bracket(d, options(workers, budget)));
  }, py::arg("diagram"), py::arg("workers") = 1, py::arg("budget") = kDefaultCrossingBudget);
  m.def("bracket_skein", [](const SurfaceDiagram& d) { return bracket_to_dict(bracket_skein(d)); });
  m.def("kauffman_f", [](const SurfaceDiagram& d) { return bracket_to_dict(kauffman_f(d)); });
  m.def("jones", [](const SurfaceDiagram& d) { return bracket_to_dict(jones(d)); });
  m.def("writhe", py::overload_cast<const SurfaceDiagram&>(&writhe));
  m.def("degree_stats", [](const SurfaceDiagram& d) {
    const auto s = degree_stats(d);
    py::dict out;
    out["maxdeg"] = s.maxdeg;
    out["mindeg"] = s.mindeg;
    out["span"] = s.span;
    out["white"] = s.white;
    out["black"] = s.black;
    out["colorable"] = s.colorable;
    return out;
  });
  m.def("adequacy", [](const SurfaceDiagram& d) {
    const auto a = adequacy(d);
    return py::make_tuple(a.plus, a.minus);
  });
  m.def("r_parallel", &r_parallel);

  m.def("canonical_form", [](const WindingSet& v, int genus) {
    const auto c = canonical_form(v, genus);
    py::dict out;
    out["set"] = c.set;
    out["u"] = c.u;
    out["q_before"] = c.q_before;
    out["q_after"] = c.q_after;
    out["certified"] = c.certified;
    return out;
  }, py::arg("winding_set"), py::arg("genus") = 1);
  m.def("q_functional", &q_functional);
  m.def("is_minimal_size", &is_minimal_size);

  m.def("fuzz", [](const SurfaceDiagram& d, int steps, std::uint64_t seed, int cap) {
    return format_trace(fuzz(d, steps, seed, cap));
  }, py::arg("diagram"), py::arg("steps"), py::arg("seed"), py::arg("cap"));
  m.def("replay", [](const SurfaceDiagram& d, const std::string& trace) { return replay(d, parse_trace(trace)); });
  m.def("crossing_number_bounds", [](const SurfaceDiagram& d) {
    const auto b = crossing_number_bounds(d);
    return py::make_tuple(b.lower, b.upper, b.lower_certified);
  });

  m.def("run_cli", [](const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return py::make_tuple(code, out.str(), err.str());
  }, py::arg("args"));
}
