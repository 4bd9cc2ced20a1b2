#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hopnorms/errors.hpp"
#include "hopnorms/exact.hpp"
#include "hopnorms/info.hpp"
#include "hopnorms/laplace.hpp"
#include "hopnorms/param.hpp"
#include "hopnorms/polykernel.hpp"
#include "hopnorms/validate.hpp"

namespace py = pybind11;
using namespace hopnorms;

namespace {

QuadratureConfig config(double rel_tol) {
  QuadratureConfig c;
  c.rel_tol = rel_tol;
  c.validate();
  return c;
}

info::DensityHandle density(const PolynomialFamily& f, int n, bool normalized) { return {f, n, normalized}; }

}  // namespace

PYBIND11_MODULE(_hopnorms, m) {
  m.doc() = "L_q norms, entropies and complexities of the classical orthogonal polynomials";

  auto base = py::register_exception<Error>(m, "HopnormsError", PyExc_RuntimeError);
  py::register_exception<InvalidInput>(m, "InvalidInput", PyExc_ValueError);
  py::register_exception<SingularEvaluation>(m, "SingularEvaluation", base.ptr());
  py::register_exception<NumericalFailure>(m, "NumericalFailure", base.ptr());
  py::register_exception<UnsupportedByTheory>(m, "UnsupportedByTheory", base.ptr());

  py::class_<SignedLogReal>(m, "SignedLogReal")
      .def_static("from_double", &SignedLogReal::from_double)
      .def_static("from_log", &SignedLogReal::from_log, py::arg("log_abs"), py::arg("sign") = 1)
      .def_property_readonly("sign", &SignedLogReal::sign)
      .def_property_readonly("log_abs", &SignedLogReal::log_abs)
      .def("__float__", &SignedLogReal::to_double)
      .def("to_double", &SignedLogReal::to_double)
      .def("__repr__", [](const SignedLogReal& v) { return "SignedLogReal(" + v.to_string() + ")"; });

  py::class_<PolynomialFamily>(m, "Family")
      .def_static("hermite", &PolynomialFamily::hermite)
      .def_static("laguerre", &PolynomialFamily::laguerre, py::arg("alpha"))
      .def_static("jacobi", &PolynomialFamily::jacobi, py::arg("alpha"), py::arg("beta"))
      .def_static("gegenbauer", &PolynomialFamily::gegenbauer, py::arg("lam"))
      .def_property_readonly("name", &PolynomialFamily::name)
      .def("__repr__", &PolynomialFamily::describe);

  py::enum_<Method>(m, "Method")
      .value("quadrature", Method::quadrature)
      .value("bell", Method::bell)
      .value("asymptotic_q", Method::asymptotic_q)
      .value("asymptotic_parameter", Method::asymptotic_parameter);

  py::class_<NormResult>(m, "NormResult")
      .def_readonly("value", &NormResult::value)
      .def_readonly("method", &NormResult::method)
      .def_readonly("error_estimate", &NormResult::error_estimate);

  m.def("eval", &eval, py::arg("family"), py::arg("n"), py::arg("x"));
  m.def("eval_log", &eval_log, py::arg("family"), py::arg("n"), py::arg("x"));
  m.def("norm_constant_log", &norm_constant_log, py::arg("family"), py::arg("n"));
  m.def("zeros", &exact::polynomial_zeros, py::arg("family"), py::arg("n"));

  m.def(
      "unweighted_norm",
      [](const PolynomialFamily& f, int n, double q, double rel_tol) {
        return exact::unweighted_norm_quad(f, n, q, config(rel_tol));
      },
      py::arg("family"), py::arg("n"), py::arg("q"), py::arg("rel_tol") = 1e-11);
  m.def(
      "weighted_norm",
      [](const PolynomialFamily& f, int n, double q, bool normalized, double rel_tol) {
        return exact::weighted_norm_quad(f, n, q, config(rel_tol), normalized);
      },
      py::arg("family"), py::arg("n"), py::arg("q"), py::arg("normalized") = false, py::arg("rel_tol") = 1e-11);
  m.def("unweighted_norm_bell", &exact::unweighted_norm_bell, py::arg("family"), py::arg("n"), py::arg("q"));
  m.def("weighted_norm_q_asym", &laplace::weighted_norm_q_asym, py::arg("family"), py::arg("n"), py::arg("q"));
  m.def("unweighted_norm_q_asym", &laplace::unweighted_norm_q_asym, py::arg("family"), py::arg("n"), py::arg("q"));
  m.def(
      "laplace_x0", [](const PolynomialFamily& f, int n) { return laplace::locate_density_maximum(f, n).x0; },
      py::arg("family"), py::arg("n"));

  m.def(
      "renyi_entropy",
      [](const PolynomialFamily& f, int n, double q, bool normalized) {
        return info::renyi_entropy(density(f, n, normalized), q);
      },
      py::arg("family"), py::arg("n"), py::arg("q"), py::arg("normalized") = true);
  m.def(
      "shannon_entropy",
      [](const PolynomialFamily& f, int n, bool normalized) { return info::shannon_entropy(density(f, n, normalized)); },
      py::arg("family"), py::arg("n"), py::arg("normalized") = true);
  m.def(
      "fisher_information",
      [](const PolynomialFamily& f, int n) { return info::fisher_information(density(f, n, true)); }, py::arg("family"),
      py::arg("n"));
  m.def(
      "lmc", [](const PolynomialFamily& f, int n) { return info::lmc_plain(density(f, n, true)); }, py::arg("family"),
      py::arg("n"));
  m.def(
      "fisher_shannon", [](const PolynomialFamily& f, int n) { return info::fisher_shannon(density(f, n, true)); },
      py::arg("family"), py::arg("n"));
  m.def(
      "functional_E",
      [](const PolynomialFamily& f, int n, bool qderivative) {
        return info::functional_E(f, n, qderivative ? info::EMethod::qderivative : info::EMethod::quadrature);
      },
      py::arg("family"), py::arg("n"), py::arg("qderivative") = false);
  m.def(
      "functional_I", [](const PolynomialFamily& f, int n) { return info::functional_I(f, n); }, py::arg("family"),
      py::arg("n"));

  py::class_<param::AsymptoticValue>(m, "AsymptoticValue")
      .def_readonly("value", &param::AsymptoticValue::value)
      .def_readonly("validity", &param::AsymptoticValue::validity)
      .def_property_readonly("power", [](const param::AsymptoticValue& a) { return a.exponents.power; })
      .def_property_readonly("form", [](const param::AsymptoticValue& a) { return param::form_name(a.form); });

  auto form = [](const std::string& s) { return param::parse_form(s); };
  m.def(
      "laguerre_weighted_param",
      [form](int n, double alpha, double q, bool normalized, const std::string& f) {
        return param::laguerre_weighted_param(n, alpha, q, normalized, form(f));
      },
      py::arg("n"), py::arg("alpha"), py::arg("q"), py::arg("normalized") = false, py::arg("form") = "limit");
  m.def(
      "jacobi_unweighted_param",
      [form](int n, double alpha, double beta, double q, const std::string& f) {
        return param::jacobi_unweighted_param(n, alpha, beta, q, param::Large::alpha, form(f));
      },
      py::arg("n"), py::arg("alpha"), py::arg("beta"), py::arg("q"), py::arg("form") = "limit");
  m.def(
      "gegenbauer_weighted_param",
      [form](int n, double lambda, double q, bool normalized, const std::string& f) {
        return param::gegenbauer_weighted_param(n, lambda, q, normalized, form(f));
      },
      py::arg("n"), py::arg("lam"), py::arg("q"), py::arg("normalized") = false, py::arg("form") = "limit");
  m.def(
      "temme_I1",
      [](int m_, double alpha, double mu, double lam, double q, int order) {
        return param::temme_I1(m_, alpha, mu, lam, q, order).value;
      },
      py::arg("m"), py::arg("alpha"), py::arg("mu"), py::arg("lam"), py::arg("q"), py::arg("order") = 2);

  m.def(
      "validate",
      [](const std::string& suite) {
        auto rep = validate::run_suite(suite);
        py::list out;
        for (const auto& c : rep.checks) {
          py::dict d;
          d["suite"] = c.suite;
          d["name"] = c.name;
          d["passed"] = c.passed;
          d["informational"] = c.informational;
          d["measured"] = c.measured;
          d["reference"] = c.reference;
          d["error"] = c.error;
          d["tolerance"] = c.tolerance;
          d["note"] = c.note;
          out.append(d);
        }
        return out;
      },
      py::arg("suite"));
}
