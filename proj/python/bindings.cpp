#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "floerkit/error.hpp"
#include "floerkit/io.hpp"

namespace py = pybind11;
using namespace floerkit;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::object& o) {
  return parse_json(py::module_::import("json").attr("dumps")(o).cast<std::string>());
}

PolytopeKind kind_of(const std::string& name) {
  if (name == "assoc") return PolytopeKind::Associahedron;
  if (name == "multi") return PolytopeKind::Multiplihedron;
  throw Error(ErrorKind::InvalidInput, "kind must be 'assoc' or 'multi'");
}

}  // namespace

PYBIND11_MODULE(_floerkit, m) {
  m.doc() = "Exact Novikov arithmetic, polytope signs, A-infinity checks and Floer fixtures";

  static py::exception<Error> error(m, "FloerkitError");
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  py::class_<Series>(m, "Series")
      .def(py::init([](const std::string& text) { return Series::parse(text); }), py::arg("literal"))
      .def(py::init<long>())
      .def("__str__", &Series::to_string)
      .def("__repr__", [](const Series& s) { return "Series('" + s.to_string() + "')"; })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def("is_zero", &Series::is_zero)
      .def("is_exact", &Series::is_exact)
      .def("valuation",
           [](const Series& s) -> py::object {
             if (auto v = s.valuation()) return py::str(to_string(v->value()));
             return py::none();
           })
      .def(
          "invert",
          [](const Series& s, const std::string& cutoff, bool rational) {
            return invert(s, Exponent(parse_rational(cutoff)),
                          rational ? CoefficientRing::Rational : CoefficientRing::Integer);
          },
          py::arg("cutoff"), py::arg("rational") = false);

  m.def(
      "f_vector", [](const std::string& kind, int l) { return f_vector(kind_of(kind), l); }, py::arg("kind"),
      py::arg("l"));
  m.def(
      "boundary_check",
      [](const std::string& kind, int l) { return to_python(to_json(boundary_map_consistency(kind_of(kind), l))); },
      py::arg("kind"), py::arg("l"));

  m.def(
      "maslov_index",
      [](const py::object& path) {
        const LagrangianPath p = path_from_json(from_python(path));
        Json out = to_json(crossings(p.at(p.start()), p));
        out["string_index"] = string_index(p);
        return to_python(out);
      },
      py::arg("path"));

  m.def(
      "check_datum",
      [](const py::object& datum) {
        const AInftyDatum d = datum_from_json(from_python(datum));
        return to_python({{"a_infinity", to_json(check_a_infinity(d))},
                          {"axioms", to_json(validate_axioms_A(assemble_differential(d)))}});
      },
      py::arg("datum"));

  m.def(
      "sphere_fixture", [](int n, int l) { return to_python(to_json(sphere_fixture(n, l))); }, py::arg("n"),
      py::arg("l") = 2);
  m.def(
      "floer_cohomology",
      [](const py::object& datum, int modulus) {
        const AInftyDatum d = datum_from_json(from_python(datum));
        return to_python(to_json(cohomology(assemble_differential(d, modulus))));
      },
      py::arg("datum"), py::arg("modulus") = 0);

  m.def(
      "sft_index_bound",
      [](int n, int g, int v, std::vector<int> mult) { return to_python(to_json(sft_index_bound({n, g, v, mult}))); },
      py::arg("n"), py::arg("g"), py::arg("v"), py::arg("m"));

  m.def(
      "is_exact",
      [](const py::object& h, const py::object& k) {
        return is_exact(continuation_from_json(from_python(h)), continuation_from_json(from_python(k)));
      },
      py::arg("h"), py::arg("k"));
}
