#include <pybind11/complex.h>
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "pnr/errors.hpp"
#include "pnr/numrange.hpp"
#include "pnr/operators.hpp"
#include "pnr/output.hpp"
#include "pnr/theorems.hpp"

namespace py = pybind11;
using namespace pnr;

namespace {

py::array_t<Complex> to_array(const RangePolygon& p) {
  py::array_t<Complex> out(static_cast<py::ssize_t>(p.size()));
  auto v = out.mutable_unchecked<1>();
  for (std::size_t i = 0; i < p.size(); ++i) v(static_cast<py::ssize_t>(i)) = p.points[i];
  return out;
}

py::array_t<Complex> to_array(const CMatrix& m) {
  const auto n = static_cast<py::ssize_t>(m.dim());
  py::array_t<Complex> out({n, n});
  auto v = out.mutable_unchecked<2>();
  for (py::ssize_t i = 0; i < n; ++i)
    for (py::ssize_t j = 0; j < n; ++j) v(i, j) = m(i, j);
  return out;
}

CMatrix from_array(const py::array_t<Complex, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 2 || a.shape(0) != a.shape(1)) throw DimensionMismatch("expected a square 2-d array");
  const auto n = static_cast<std::size_t>(a.shape(0));
  std::vector<Complex> entries(a.data(), a.data() + n * n);
  return CMatrix(n, std::move(entries));
}

RangePolygon polygon_from(const py::array_t<Complex, py::array::c_style | py::array::forcecast>& a) {
  if (a.ndim() != 1) throw DimensionMismatch("expected a 1-d array of vertices");
  return RangePolygon{std::vector<Complex>(a.data(), a.data() + a.shape(0))};
}

SweepConfig config(int num_theta, int num_phi, double refine_tol) {
  SweepConfig cfg{num_theta, num_phi, refine_tol};
  cfg.validate();
  return cfg;
}

const char* expect_name(Expect e) {
  switch (e) {
    case Expect::pass: return "pass";
    case Expect::fail: return "fail";
    case Expect::none: return "none";
  }
  return "none";
}

}  // namespace

PYBIND11_MODULE(_pnr, m) {
  py::register_exception<Error>(m, "Error", PyExc_RuntimeError);
  py::register_exception<NotSelfAdjoint>(m, "NotSelfAdjoint", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);
  py::register_exception<DimensionMismatch>(m, "DimensionMismatch", PyExc_ValueError);

  py::class_<PeriodSpec>(m, "PeriodSpec")
      .def_static("parse", &parse_spec, py::arg("text"))
      .def_static("from_word", &PeriodSpec::from_word, py::arg("word"))
      .def_readonly("a", &PeriodSpec::a)
      .def_readonly("b", &PeriodSpec::b)
      .def_readonly("c", &PeriodSpec::c)
      .def_property_readonly("period", &PeriodSpec::period)
      .def("is_self_adjoint", &PeriodSpec::is_self_adjoint, py::arg("tol") = 1e-12)
      .def("__str__", &format_spec);

  m.def(
      "range_boundary",
      [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& a, int num_theta,
         double refine_tol) { return to_array(range_boundary(from_array(a), config(num_theta, 720, refine_tol))); },
      py::arg("matrix"), py::arg("num_theta") = 720, py::arg("refine_tol") = 0.0);

  m.def(
      "symbol_union_hull",
      [](const PeriodSpec& spec, int num_theta, int num_phi) {
        return to_array(symbol_union_hull(spec, config(num_theta, num_phi, 0.0)));
      },
      py::arg("spec"), py::arg("num_theta") = 720, py::arg("num_phi") = 720);

  m.def(
      "truncation_range",
      [](const PeriodSpec& spec, std::size_t k, int num_theta) {
        return to_array(truncation_range(spec, k, config(num_theta, 720, 0.0)));
      },
      py::arg("spec"), py::arg("k"), py::arg("num_theta") = 720);

  m.def(
      "selfadjoint_interval",
      [](const PeriodSpec& spec, int num_phi) {
        const Interval iv = selfadjoint_interval(spec, config(720, num_phi, 0.0));
        return py::make_tuple(iv.lower, iv.upper);
      },
      py::arg("spec"), py::arg("num_phi") = 720);

  m.def(
      "build_symbol", [](const PeriodSpec& spec, double phi) { return to_array(build_symbol(spec, phi)); },
      py::arg("spec"), py::arg("phi"));
  m.def(
      "build_truncation", [](const PeriodSpec& spec, std::size_t k) { return to_array(build_truncation(spec, k)); },
      py::arg("spec"), py::arg("k"));
  m.def(
      "conjecture_matrices",
      [](std::size_t n) {
        const ConjecturePair bj = conjecture_matrices(n);
        return py::make_tuple(to_array(bj.plus), to_array(bj.minus));
      },
      py::arg("n"));

  m.def(
      "hausdorff",
      [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& p,
         const py::array_t<Complex, py::array::c_style | py::array::forcecast>& q) {
        return hausdorff(polygon_from(p), polygon_from(q));
      },
      py::arg("p"), py::arg("q"));
  m.def(
      "support_width",
      [](const py::array_t<Complex, py::array::c_style | py::array::forcecast>& p, double theta) {
        return support_width(polygon_from(p), theta);
      },
      py::arg("polygon"), py::arg("theta"));

  m.def(
      "run_checks",
      [](const std::string& profile, const std::string& filter, std::uint64_t seed) {
        py::list out;
        for (const auto& check : plan_checks(parse_profile(profile), seed)) {
          if (!filter.empty() && check.name.find(filter) == std::string::npos) continue;
          CheckReport r = check.run();
          py::dict d;
          d["name"] = check.name;
          d["metric"] = r.metric;
          d["tolerance"] = r.tolerance;
          d["passed"] = r.passed;
          d["expect"] = expect_name(r.expect);
          d["as_expected"] = r.as_expected();
          out.append(d);
        }
        return out;
      },
      py::arg("profile") = "quick", py::arg("filter") = "", py::arg("seed") = 2024);
}
