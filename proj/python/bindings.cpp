#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "smoothram/reporting.hpp"

namespace py = pybind11;
using namespace smoothram;

namespace {

py::object fraction(const Rational& r) {
  return py::module_::import("fractions").attr("Fraction")(to_string(r));
}

// Accepts int, str ("p/q") or fractions.Fraction.
Rational rational_arg(const py::handle& obj) {
  return parse_rational(py::str(obj).cast<std::string>());
}

py::tuple bounded(const BoundedValue& v) { return py::make_tuple(fraction(v.center), fraction(v.radius)); }

py::object json_object(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

ArithmeticFunction function_arg(const py::object& obj) {
  if (py::isinstance<py::str>(obj)) return ArithmeticFunction::from_catalog(obj.cast<std::string>());
  return obj.cast<ArithmeticFunction>();
}

RangeQFunction range_arg(const py::object& obj, u64 range) {
  return RangeQFunction::from_spec(function_arg(obj), range);
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact smooth-restricted Ramanujan expansion toolkit";

  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<CertificateError>(m, "CertificateError", PyExc_ValueError);
  py::register_exception<TruncationError>(m, "TruncationError", PyExc_RuntimeError);
  py::register_exception<PeriodicityError>(m, "PeriodicityError", PyExc_RuntimeError);

  py::class_<ArithmeticFunction>(m, "ArithmeticFunction")
      .def_static("from_catalog", &ArithmeticFunction::from_catalog, py::arg("id"))
      .def_static(
          "from_text",
          [](const std::string& text, const std::string& name) {
            return parse_function_text(text, name);
          },
          py::arg("text"), py::arg("name") = "text")
      .def_static("from_file", &parse_function_file, py::arg("path"))
      .def_property_readonly("name", &ArithmeticFunction::name)
      .def_property_readonly("transform_support", &ArithmeticFunction::transform_support)
      .def("value", [](const ArithmeticFunction& f, u64 n) { return fraction(f.value(n)); })
      .def("transform", [](const ArithmeticFunction& f, u64 n) { return fraction(f.transform(n)); })
      .def("__repr__", [](const ArithmeticFunction& f) { return "<ArithmeticFunction " + f.name() + ">"; });

  m.def("ramanujan_sum", &ramanujan_sum, py::arg("q"), py::arg("n"));
  m.def("mobius", &mobius, py::arg("n"));
  m.def("euler_phi", &euler_phi, py::arg("n"));
  m.def("smooth_up_to", [](u64 q, u64 x) { return smooth_up_to(SmoothContext(q), x); },
        py::arg("Q"), py::arg("X"));
  m.def("smooth_power_series",
        [](u64 q, const py::object& s) { return fraction(smooth_power_series(SmoothContext(q), rational_arg(s))); },
        py::arg("Q"), py::arg("s"));

  m.def("smooth_restrict",
        [](const py::object& f, u64 v, u64 n) { return fraction(smooth_restrict(function_arg(f), SmoothContext(v), n)); },
        py::arg("f"), py::arg("V"), py::arg("n"));

  m.def(
      "coefficients",
      [](const py::object& f, u64 v, u64 max_index, u64 cutoff) {
        py::list out;
        for (const auto& r : coefficient_table(function_arg(f), SmoothContext(v), max_index,
                                               {cutoff, std::nullopt})) {
          py::dict d;
          d["ell"] = r.ell;
          d["wintner"] = bounded(r.wintner);
          d["carmichael"] = bounded(r.carmichael);
          d["method"] = r.method;
          out.append(d);
        }
        return out;
      },
      py::arg("f"), py::arg("V"), py::arg("L"), py::arg("X") = 10000);

  m.def("prop2_exact", [](u64 q, u64 ell) { return fraction(prop2_exact(q, ell)); },
        py::arg("q"), py::arg("ell"));
  m.def(
      "prop2_truncated",
      [](u64 bound, u64 q, u64 ell, u64 cutoff) {
        return bounded(prop2_truncated(SmoothContext(bound), q, ell, {cutoff, std::nullopt}));
      },
      py::arg("Q"), py::arg("q"), py::arg("ell"), py::arg("X") = 10000);
  m.def(
      "orthogonality_matrix",
      [](u64 bound, u64 max_index) {
        const auto mat = orthogonality_matrix(SmoothContext(bound), max_index);
        py::list rows;
        for (const auto& row : mat.values) {
          py::list r;
          for (const auto& v : row) r.append(fraction(v));
          rows.append(r);
        }
        return py::make_tuple(mat.indices, rows);
      },
      py::arg("Q"), py::arg("max_index"));

  m.def(
      "correlation",
      [](const py::object& f, const py::object& g, u64 range, u64 length, u64 a) {
        return fraction(correlation(function_arg(f), range_arg(g, range), length, a));
      },
      py::arg("f"), py::arg("g"), py::arg("Q"), py::arg("N"), py::arg("a"));
  m.def(
      "correlation_coefficient",
      [](const py::object& f, const py::object& g, u64 range, u64 length, u64 ell) {
        const CorrelationTable table(function_arg(f), range_arg(g, range), length, 1);
        return fraction(correlation_coefficient(table, ell));
      },
      py::arg("f"), py::arg("g"), py::arg("Q"), py::arg("N"), py::arg("ell"));

  m.def(
      "counterexample1",
      [](u64 length, u64 range, u64 n0, u64 q0) {
        return json_object(to_json(counterexample1(length, range, n0, q0)));
      },
      py::arg("N"), py::arg("Q"), py::arg("n0"), py::arg("q0"));
  m.def(
      "reef_report",
      [](const py::object& f, const py::object& g, u64 range, u64 length, u64 a) {
        return json_object(to_json(reef_report(function_arg(f), range_arg(g, range), length, a)));
      },
      py::arg("f"), py::arg("g"), py::arg("Q"), py::arg("N"), py::arg("a"));
  m.def(
      "conjecture1_eval",
      [](u64 bound, u64 q, u64 ell, i64 n, u64 cutoff) {
        return bounded(conjecture1_eval(SmoothContext(bound), q, ell, n, {cutoff, std::nullopt}));
      },
      py::arg("Q"), py::arg("q"), py::arg("ell"), py::arg("n"), py::arg("X") = 10000);
  m.def(
      "conjecture1_sweep",
      [](u64 bound, u64 max_index, u64 max_shift, u64 start, u64 cap, std::size_t stop_after) {
        SweepResult result;
        {
          py::gil_scoped_release release;
          result = conjecture1_sweep(SmoothContext(bound),
                                     {max_index, max_shift, start, cap, stop_after});
        }
        return json_object(to_json(result));
      },
      py::arg("Q"), py::arg("max_index") = 0, py::arg("max_shift") = 0, py::arg("X") = 10000,
      py::arg("X_cap") = u64{1} << 24, py::arg("stop_after") = 1);
  m.def(
      "approximate_reef_residual",
      [](const py::object& f, const py::object& g, u64 range, u64 length, u64 a_max,
         const py::object& delta) {
        return json_object(to_json(approximate_reef_residual(
            function_arg(f), range_arg(g, range), length, a_max, rational_arg(delta))));
      },
      py::arg("f"), py::arg("g"), py::arg("Q"), py::arg("N"), py::arg("a_max"),
      py::arg("delta") = "1/2");
}
