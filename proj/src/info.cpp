#include "hopnorms/info.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hopnorms/errors.hpp"
#include "hopnorms/exact.hpp"
#include "hopnorms/polykernel.hpp"

namespace hopnorms::info {

namespace {

constexpr double kZeroRadius = 1e-14;

bool near_zero(const std::vector<double>& zeros, double x) {
  auto it = std::lower_bound(zeros.begin(), zeros.end(), x);
  if (it != zeros.end() && *it - x < kZeroRadius) return true;
  return it != zeros.begin() && x - *(it - 1) < kZeroRadius;
}

// problem_for plus the 0 ln 0 = 0 convention around the zeros of p_n.
IntegrationProblem zero_guarded_problem(const PolynomialFamily& f, int n, LogIntegrand g, double lo, double hi) {
  IntegrationProblem p = exact::problem_for(f, n, nullptr, lo, hi);
  p.f = [g = std::move(g), zeros = p.breakpoints](const SupportPoint& pt) {
    if (near_zero(zeros, pt.x)) return SignedLogReal::zero();
    return g(pt);
  };
  return p;
}

double log_mass(const DensityHandle& d) { return d.normalized ? 0.0 : norm_constant_log(d.family, d.n).log_abs(); }

double log_kappa_shift(const DensityHandle& d) {
  return d.normalized ? norm_constant_log(d.family, d.n).log_abs() : 0.0;
}

// Inner evaluations of finite differences need a tighter tolerance than the
// step-size truncation they feed.
QuadratureConfig derivative_config(const QuadratureConfig& cfg) {
  QuadratureConfig c = cfg;
  c.rel_tol = std::min(cfg.rel_tol, 1e-13);
  return c;
}

// Richardson-extrapolated central difference of g at x from steps h and h/2.
template <class G>
double richardson_derivative(G&& g, double x, double h) {
  auto central = [&](double s) { return (g(x + s) - g(x - s)) / (2 * s); };
  double d1 = central(h), d2 = central(h / 2);
  return (4 * d2 - d1) / 3;
}

void require_normalized(const DensityHandle& d, const char* what) {
  if (!d.normalized) throw InvalidInput(std::string(what) + " is defined for the normalized density only");
}

// Endpoint exponents at finite ends, or NaN where the end is infinite.
std::pair<double, double> endpoint_exponents(const PolynomialFamily& f) {
  auto s = f.support();
  return {s.lower_finite() ? f.lower_exponent() : NAN, s.upper_finite() ? f.upper_exponent() : NAN};
}

// With exponent a at a finite end, (rho')^2/rho ~ a^2 t^{a-2}: integrable only
// for a > 1. At a = 0 the support integral is finite but rho jumps from a
// nonzero value to 0 there, so the Fisher information of rho on the line is
// infinite as well (and the Fisher-Shannon bound would fail for the support
// integral, e.g. e/(2 pi) for Laguerre alpha = 0, n = 0).
bool fisher_ok(double a) { return std::isnan(a) || a > 1.0; }

}  // namespace

void DensityHandle::check(const QuadratureConfig& cfg) const {
  if (n < 0) throw InvalidInput("degree must be nonnegative");
  if (!normalized) return;
  double mass = exact::weighted_norm_quad(family, n, 1.0, cfg, true).value.to_double();
  if (!(std::fabs(mass - 1) <= 1e-9))
    throw NumericalFailure("normalized density integrates to " + std::to_string(mass));
}

double renyi_entropy(const DensityHandle& d, double q, const QuadratureConfig& cfg) {
  if (q == 1.0) throw InvalidInput("Renyi entropy at q = 1 is the Shannon entropy; use shannon_entropy");
  return exact::weighted_norm_quad(d.family, d.n, q, cfg, d.normalized).value.log_abs() / (1 - q);
}

double shannon_entropy(const DensityHandle& d, const QuadratureConfig& cfg) {
  if (d.n < 0) throw InvalidInput("degree must be nonnegative");
  const PolynomialFamily& f = d.family;
  const int n = d.n;
  const double shift = log_kappa_shift(d);
  auto g = [&f, n, shift](const SupportPoint& pt) -> SignedLogReal {
    SignedLogReal p = eval_log(f, n, pt.x);
    SignedLogReal h = weight_log(f, pt);
    if (p.is_zero() || h.is_zero()) return SignedLogReal::zero();
    double log_rho = 2 * p.log_abs() + h.log_abs() - shift;
    if (log_rho == 0.0) return SignedLogReal::zero();
    return SignedLogReal::from_log(log_rho + std::log(std::fabs(log_rho)), log_rho > 0 ? -1 : 1);
  };
  auto r = integrate(zero_guarded_problem(f, n, g, f.lower_exponent(), f.upper_exponent()), cfg);
  return r.value.to_double();
}

SignedLogReal functional_E(const PolynomialFamily& f, int n, EMethod method, const QuadratureConfig& cfg) {
  if (n < 0) throw InvalidInput("degree must be nonnegative");
  if (method == EMethod::qderivative) {
    // dN_q/dq at q = 2 is int p^2 h ln|p| = -E/2; differentiate ln N_q instead
    // so that the difference quotient never leaves the double range.
    QuadratureConfig c = derivative_config(cfg);
    auto log_n = [&](double q) { return exact::unweighted_norm_quad(f, n, q, c).value.log_abs(); };
    double dlog = richardson_derivative(log_n, 2.0, 1e-3);
    if (dlog == 0.0) return SignedLogReal::zero();
    SignedLogReal kappa = norm_constant_log(f, n);
    return SignedLogReal::from_log(kappa.log_abs() + std::log(2 * std::fabs(dlog)), dlog > 0 ? -1 : 1);
  }
  auto g = [&f, n](const SupportPoint& pt) -> SignedLogReal {
    SignedLogReal p = eval_log(f, n, pt.x);
    SignedLogReal h = weight_log(f, pt);
    if (p.is_zero() || h.is_zero() || p.log_abs() == 0.0) return SignedLogReal::zero();
    double lp2 = 2 * p.log_abs();
    return SignedLogReal::from_log(lp2 + h.log_abs() + std::log(std::fabs(lp2)), lp2 > 0 ? -1 : 1);
  };
  return integrate(zero_guarded_problem(f, n, g, f.lower_exponent(), f.upper_exponent()), cfg).value;
}

SignedLogReal functional_I(const PolynomialFamily& f, int n, const QuadratureConfig& cfg) {
  if (n < 0) throw InvalidInput("degree must be nonnegative");
  auto g = [&f, n](const SupportPoint& pt) -> SignedLogReal {
    SignedLogReal p = eval_log(f, n, pt.x);
    SignedLogReal h = weight_log(f, pt);
    if (p.is_zero() || h.is_zero() || h.log_abs() == 0.0) return SignedLogReal::zero();
    double lh = h.log_abs();
    return SignedLogReal::from_log(2 * p.log_abs() + lh + std::log(std::fabs(lh)), lh > 0 ? -1 : 1);
  };
  // ln h vanishes identically for the Legendre weight.
  if (f.lower_exponent() == 0 && f.upper_exponent() == 0 && f.kind() != FamilyKind::hermite &&
      f.kind() != FamilyKind::laguerre)
    return SignedLogReal::zero();
  return integrate(zero_guarded_problem(f, n, g, f.lower_exponent(), f.upper_exponent()), cfg).value;
}

bool fisher_diverges(const PolynomialFamily& f) {
  auto [lo, hi] = endpoint_exponents(f);
  return !fisher_ok(lo) || !fisher_ok(hi);
}

double fisher_information(const DensityHandle& d, const QuadratureConfig& cfg) {
  if (d.n < 0) throw InvalidInput("degree must be nonnegative");
  const PolynomialFamily& f = d.family;
  auto [lo, hi] = endpoint_exponents(f);
  if (fisher_diverges(f))
    throw InvalidInput("Fisher information diverges for " + f.describe() +
                       ": each finite-end weight exponent must exceed 1");
  // (rho')^2 / rho = h (2 p' + p h'/h)^2, which stays smooth through the zeros of p.
  const int n = d.n;
  const double shift = log_kappa_shift(d);
  auto g = [&f, n, shift](const SupportPoint& pt) -> SignedLogReal {
    SignedLogReal h = weight_log(f, pt);
    if (h.is_zero()) return h;
    SignedLogReal p = eval_log(f, n, pt.x);
    SignedLogReal dp = eval_derivative_log(f, n, pt.x);
    SignedLogReal t = SignedLogReal::from_double(2.0) * dp + p * SignedLogReal::from_double(weight_log_derivative(f, pt));
    if (t.is_zero()) return t;
    return SignedLogReal::from_log(2 * t.log_abs() + h.log_abs() - shift);
  };
  auto end_exp = [](double a) { return std::isnan(a) ? 0.0 : a - 2; };
  auto prob = exact::problem_for(f, n, g, end_exp(lo), end_exp(hi));
  return integrate(prob, cfg).value.to_double();
}

double variance(const DensityHandle& d, const QuadratureConfig& cfg) {
  const PolynomialFamily& f = d.family;
  const int n = d.n;
  auto moment = [&](int k) {
    auto g = [&f, n, k](const SupportPoint& pt) -> SignedLogReal {
      SignedLogReal p = eval_log(f, n, pt.x);
      SignedLogReal h = weight_log(f, pt);
      if (p.is_zero() || h.is_zero() || (k > 0 && pt.x == 0)) return SignedLogReal::zero();
      SignedLogReal v = SignedLogReal::from_log(2 * p.log_abs() + h.log_abs());
      return k == 0 ? v : v * SignedLogReal::from_double(std::pow(pt.x, k));
    };
    return integrate(exact::problem_for(f, n, g, f.lower_exponent(), f.upper_exponent()), cfg).value;
  };
  SignedLogReal m0 = norm_constant_log(f, n);
  double m1 = (moment(1) / m0).to_double(), m2 = (moment(2) / m0).to_double();
  return m2 - m1 * m1;
}

double renyi_length(const DensityHandle& d, double q, const QuadratureConfig& cfg) {
  return std::exp(renyi_entropy(d, q, cfg));
}

double shannon_length(const DensityHandle& d, const QuadratureConfig& cfg) {
  return std::exp(shannon_entropy(d, cfg));
}

double lmc_renyi(const DensityHandle& d, double a, double b, const QuadratureConfig& cfg) {
  require_normalized(d, "LMC-Renyi complexity");
  if (!(a > 0 && a < b) || a == 1 || b == 1) throw InvalidInput("LMC-Renyi complexity needs 0 < a < b with a, b != 1");
  return std::exp(renyi_entropy(d, a, cfg) - renyi_entropy(d, b, cfg));
}

double lmc_plain(const DensityHandle& d, const QuadratureConfig& cfg) {
  require_normalized(d, "LMC complexity");
  double log_w2 = exact::weighted_norm_quad(d.family, d.n, 2.0, cfg, true).value.log_abs();
  return std::exp(shannon_entropy(d, cfg) + log_w2);
}

double fisher_shannon(const DensityHandle& d, const QuadratureConfig& cfg) {
  require_normalized(d, "Fisher-Shannon complexity");
  double fi = fisher_information(d, cfg);
  return fi * std::exp(2 * shannon_entropy(d, cfg)) / (2 * std::numbers::pi * std::numbers::e);
}

double fisher_renyi(const DensityHandle& d, double q, const QuadratureConfig& cfg) {
  require_normalized(d, "Fisher-Renyi complexity");
  double fi = fisher_information(d, cfg);
  return fi * std::exp(2 * renyi_entropy(d, q, cfg)) / (2 * std::numbers::pi * std::numbers::e);
}

double shannon_from_Wq_derivative(const DensityHandle& d, const QuadratureConfig& cfg, double step) {
  if (!(step > 0 && step < 0.1)) throw InvalidInput("derivative step must lie in (0, 0.1)");
  QuadratureConfig c = derivative_config(cfg);
  auto log_w = [&](double q) { return exact::weighted_norm_quad(d.family, d.n, q, c, d.normalized).value.log_abs(); };
  // W_1 is the total mass, so dW/dq = W_1 d(ln W)/dq there.
  return -std::exp(log_mass(d)) * richardson_derivative(log_w, 1.0, step);
}

}  // namespace hopnorms::info
