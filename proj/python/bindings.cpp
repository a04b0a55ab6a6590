#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "amcx/admissibility.hpp"
#include "amcx/augmented.hpp"
#include "amcx/probes.hpp"
#include "amcx/report.hpp"

namespace py = pybind11;
using namespace amcx;

namespace {

Sign parse_sign(const std::string& s) {
  if (s == "plus" || s == "+") return Sign::Plus;
  if (s == "minus" || s == "-") return Sign::Minus;
  throw py::value_error("sign must be 'plus' or 'minus'");
}

py::dict jet_dict(const Jet2& j) {
  const std::size_t n = j.dim();
  std::vector<std::vector<double>> h(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) h[i][k] = j.hess(i, k);
  py::dict d;
  d["value"] = j.value();
  d["grad"] = j.gradient();
  d["hess"] = h;
  return d;
}

FamilyParams family(int n, double eps, const std::string& sign) {
  return FamilyParams::full(n, eps, parse_sign(sign));
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Augmented Monge-Ampere counterexample family: jets, determinants, probes";
  py::register_exception<JetError>(m, "JetError", PyExc_ValueError);
  py::register_exception<SingularMatrixError>(m, "SingularMatrixError", PyExc_ArithmeticError);

  m.def("version", &report_version);
  m.def("alpha", [](int n) { return FamilyParams::full(n, 1.0).alpha(); }, py::arg("n"));

  m.def(
      "z",
      [](std::vector<double> x, double eps, const std::string& sign) {
        const auto p = family(static_cast<int>(x.size()), eps, sign);
        return jet_dict(eval_z(p, EvalPoint(p, std::move(x))));
      },
      py::arg("x"), py::arg("eps"), py::arg("sign") = "plus",
      "Value, gradient and Hessian of z at x.");

  m.def(
      "f",
      [](std::vector<double> x, double eps, const std::string& sign) {
        const auto p = family(static_cast<int>(x.size()), eps, sign);
        return jet_dict(f_jet(p, EvalPoint(p, std::move(x))));
      },
      py::arg("x"), py::arg("eps"), py::arg("sign") = "plus",
      "Value, gradient and Hessian of f = det(D^2 z + sigma Dz Dz^T).");

  m.def(
      "det_routes",
      [](std::vector<double> x, double eps, const std::string& sign) {
        const auto p = family(static_cast<int>(x.size()), eps, sign);
        const AugmentedEval a = evaluate_augmented(p, EvalPoint(p, std::move(x)));
        return py::make_tuple(a.det_direct, a.det_reduced);
      },
      py::arg("x"), py::arg("eps"), py::arg("sign") = "plus",
      "(direct LU, reduced) determinants of the augmented Hessian.");

  m.def(
      "blowup",
      [](int n, std::vector<double> eps, const std::string& sign) {
        const BlowupTable t = blowup_probe(n, parse_sign(sign), eps);
        py::list rows;
        for (const auto& r : t.rows) {
          py::dict d;
          d["epsilon"] = r.epsilon;
          d["z33"] = r.z33;
          d["predicted"] = r.predicted;
          d["slope"] = r.slope ? py::object(py::float_(*r.slope)) : py::none();
          rows.append(d);
        }
        return py::make_tuple(t.pass, rows);
      },
      py::arg("n"), py::arg("eps"), py::arg("sign") = "plus");

  m.def(
      "certify_point",
      [](std::vector<double> x, double eps, const std::string& sign) {
        const auto p = family(static_cast<int>(x.size()), eps, sign);
        const PointCertificate c = certify_point(p, EvalPoint(p, std::move(x)));
        return py::make_tuple(c.minors_positive && c.eigen_positive, c.minors, c.min_eigenvalue);
      },
      py::arg("x"), py::arg("eps"), py::arg("sign") = "plus");

  py::class_<RunConfig>(m, "RunConfig")
      .def(py::init<>())
      .def_readwrite("subcommand", &RunConfig::subcommand)
      .def_readwrite("n", &RunConfig::n)
      .def_readwrite("sign", &RunConfig::sign)
      .def_readwrite("eps_list", &RunConfig::eps_list)
      .def_readwrite("rho", &RunConfig::rho)
      .def_readwrite("grid_res", &RunConfig::grid_res)
      .def_readwrite("pair_count", &RunConfig::pair_count)
      .def_readwrite("samples", &RunConfig::samples)
      .def_readwrite("seed", &RunConfig::seed)
      .def_readwrite("rho_ladder", &RunConfig::rho_ladder)
      .def_readwrite("eta_list", &RunConfig::eta_list)
      .def_readwrite("identity_tol", &RunConfig::identity_tol)
      .def_readwrite("minor_tol", &RunConfig::minor_tol)
      .def_readwrite("uniform_excess_tol", &RunConfig::uniform_excess_tol)
      .def_readwrite("format", &RunConfig::format)
      .def_readwrite("plot", &RunConfig::plot);

  py::class_<RunResult>(m, "RunResult")
      .def_readonly("passed", &RunResult::pass)
      .def_readonly("json", &RunResult::json)
      .def_readonly("csv", &RunResult::csv)
      .def_readonly("svgs", &RunResult::svgs);

  m.def("run_suites", &run_suites, py::arg("config"), py::call_guard<py::gil_scoped_release>());
}
