#include "sexakit/corpus.hpp"
#include "sexakit/errors.hpp"
#include "sexakit/expr.hpp"
#include "sexakit/geometry.hpp"
#include "sexakit/procedures.hpp"
#include "sexakit/sexa.hpp"
#include "sexakit/units.hpp"

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <algorithm>
#include <optional>
#include <string>

namespace py = pybind11;
using namespace sexakit;

namespace {

BigInt to_bigint(const py::int_& v) { return BigInt(py::str(v).cast<std::string>()); }

py::int_ to_pyint(const BigInt& v) {
  return py::reinterpret_steal<py::int_>(PyLong_FromString(v.str().c_str(), nullptr, 10));
}

py::object to_python(const nlohmann::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

DivisionMode mode_from_name(const std::string& name) {
  if (name == "scribal") return DivisionMode::Scribal;
  if (name == "recognize") return DivisionMode::Recognize;
  if (name == "oracle") return DivisionMode::Oracle;
  throw py::value_error("mode must be 'scribal', 'recognize' or 'oracle'");
}

py::dict trace_result(const StepTrace& t) {
  py::dict d;
  d["trace"] = to_python(t.to_json());
  return d;
}

std::vector<TabletProblem> corpus_from(const std::optional<std::string>& path) {
  return path ? load_corpus(*path) : parse_corpus(bundled_corpus_text());
}

}  // namespace

PYBIND11_MODULE(_sexakit, m) {
  m.doc() = "Exact sexagesimal arithmetic, scribal procedures and tablet replay.";

  static py::handle error_type =
      py::exception<Error>(m, "SexakitError", PyExc_ValueError).release();
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::object inst = py::reinterpret_borrow<py::object>(error_type)(e.what());
      inst.attr("kind") = std::string(to_string(e.kind()));
      if (auto* irr = dynamic_cast<const IrregularDivisorError*>(&e)) {
        inst.attr("factor") = irr->factor();
      }
      PyErr_SetObject(error_type.ptr(), inst.ptr());
    }
  });

  py::class_<Sexa>(m, "Sexa")
      .def(py::init([](const py::int_& v) { return Sexa(to_bigint(v)); }), py::arg("value"))
      .def(py::init(&Sexa::parse), py::arg("literal"))
      .def(py::init([](const py::int_& n, const py::int_& d) {
             return Sexa(to_bigint(n), to_bigint(d));
           }),
           py::arg("numerator"), py::arg("denominator"))
      .def_static("parse", &Sexa::parse)
      .def("render", &Sexa::render)
      .def("render_fraction", &Sexa::render_fraction)
      .def("terminates", &Sexa::terminates)
      .def_property_readonly("numerator", [](const Sexa& x) { return to_pyint(x.numerator()); })
      .def_property_readonly("denominator",
                             [](const Sexa& x) { return to_pyint(x.denominator()); })
      .def("digits",
           [](const Sexa& x) {
             SexaDigits d = x.to_digits();
             return py::make_tuple(d.sign, d.digits, d.radix_offset);
           })
      .def(py::self + py::self)
      .def(py::self - py::self)
      .def(py::self * py::self)
      .def(-py::self)
      .def(py::self == py::self)
      .def(py::self != py::self)
      .def(py::self < py::self)
      .def(py::self <= py::self)
      .def(py::self > py::self)
      .def(py::self >= py::self)
      .def("__hash__",
           [](const Sexa& x) { return py::hash(py::make_tuple(to_pyint(x.numerator()),
                                                              to_pyint(x.denominator()))); })
      .def("__str__", &Sexa::render_or_fraction)
      .def("__repr__",
           [](const Sexa& x) { return "Sexa('" + x.render_or_fraction() + "')"; });
  py::implicitly_convertible<py::int_, Sexa>();
  py::implicitly_convertible<py::str, Sexa>();

  py::class_<Quantity>(m, "Quantity")
      .def(py::init([](const Sexa& v, const std::string& unit) {
             return Quantity::with_unit(v, unit);
           }),
           py::arg("magnitude"), py::arg("unit") = "1")
      .def_static("parse", &Quantity::parse)
      .def_readonly("magnitude", &Quantity::magnitude)
      .def_property_readonly("unit", [](const Quantity& q) { return std::string(unit_name(q.dim)); })
      .def(py::self == py::self)
      .def("__mul__", &qmul)
      .def("__truediv__", &qdiv)
      .def("__add__", &qadd)
      .def("__sub__", &qsub)
      .def("__str__", &Quantity::to_string)
      .def("__repr__", [](const Quantity& q) { return "Quantity('" + q.to_string() + "')"; });

  m.def("add", &add);
  m.def("sub", &sub);
  m.def("mul", &mul);
  m.def("square", &square);
  m.def("halve", &halve);
  m.def("is_regular", &is_regular);
  m.def("reciprocal", &reciprocal, "Table reciprocal of a regular number.");
  m.def("exact_inverse", &exact_inverse);
  m.def("sqrt_exact", &sqrt_exact);
  m.def("evaluate", [](const std::string& expr, const std::string& mode) {
    return evaluate(expr, mode_from_name(mode));
  }, py::arg("expression"), py::arg("mode") = "scribal");

  m.def("solve_quadratic", [](const Sexa& a, const Sexa& b, const Sexa& c) {
    QuadraticSolution s = solve_quadratic_scribal({a, b, c});
    py::dict d = trace_result(s.trace);
    d["root"] = s.root;
    return d;
  }, py::arg("a"), py::arg("b"), py::arg("c"));
  m.def("solve_sum_difference", [](const Sexa& diff, const Sexa& prod) {
    SumDifferenceSolution s = solve_sum_difference({diff, prod});
    py::dict d = trace_result(s.trace);
    d["x"] = s.x;
    d["y"] = s.y;
    return d;
  }, py::arg("diff"), py::arg("prod"));
  m.def("divide_by_recognition", &divide_by_recognition);
  m.def("apply_identity_sum_of_squares", &apply_identity_sum_of_squares);

  m.def("trapezoid_cross_section", [](const Sexa& u, const Sexa& v, const Sexa& z) {
    return trapezoid_cross_section(nindan(u), nindan(v), kus(z));
  });
  m.def("prism_volume", [](const Sexa& s, const Sexa& x) {
    return prism_volume(nindan_kus(s), nindan(x));
  });
  m.def("length_from_volume", [](const Sexa& v, const Sexa& s) {
    return length_from_volume(volume_sar(v), nindan_kus(s));
  });
  m.def("breadths_from_constraints", [](const Sexa& u) {
    BreadthResult r = breadths_from_constraints(u);
    py::dict d = trace_result(r.trace);
    d["v"] = r.v;
    d["z"] = r.z;
    return d;
  });
  m.def("depth_from_labor",
        [](const Quantity& total, const Sexa& reach, const Sexa& gang, const Sexa& y,
           const Sexa& constant) {
          LaborDepthResult r =
              depth_from_labor(total, reach, workers(gang), nindan(y), CanalConstant(constant));
          py::dict d = trace_result(r.trace);
          d["z"] = r.depth;
          d["z_water"] = r.water_depth;
          return d;
        },
        py::arg("total_water"), py::arg("reach"), py::arg("workers"), py::arg("width"),
        py::arg("constant") = Sexa(4, 5));

  m.def("bundled_corpus_text", [] { return std::string(bundled_corpus_text()); });
  m.def("problem_ids", [](const std::optional<std::string>& path) {
    std::vector<std::string> ids;
    for (const auto& p : corpus_from(path)) ids.push_back(p.id);
    return ids;
  }, py::arg("corpus") = py::none());
  m.def("replay", [](const std::string& id, const std::optional<std::string>& path) {
    auto problems = corpus_from(path);
    auto it = std::find_if(problems.begin(), problems.end(),
                           [&](const TabletProblem& p) { return p.id == id; });
    if (it == problems.end()) throw Error(ErrorKind::UnknownProblem, "'" + id + "'");
    return to_python(replay(*it).to_json());
  }, py::arg("problem_id"), py::arg("corpus") = py::none());
}
