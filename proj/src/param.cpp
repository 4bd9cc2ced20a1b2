#include "hopnorms/param.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "hopnorms/errors.hpp"
#include "hopnorms/exact.hpp"
#include "hopnorms/family.hpp"
#include "hopnorms/info.hpp"
#include "hopnorms/polykernel.hpp"
#include "hopnorms/special.hpp"

namespace hopnorms::param {

namespace {

constexpr double kLn2 = std::numbers::ln2;
const double kLnPi = std::log(std::numbers::pi);
const double kLn2Pi = std::log(2 * std::numbers::pi);

double lg(double x) { return log_gamma(x); }
double lf(int n) { return log_factorial(n); }

void need(bool ok, const char* what) {
  if (!ok) throw InvalidInput(what);
}

void check_degree(int n) { need(n >= 0, "degree must be nonnegative"); }
void check_q(double q) { need(q > 0 && std::isfinite(q), "q must be a finite positive number"); }
void check_large(double p, const char* name) {
  if (!(p > 0 && std::isfinite(p))) throw InvalidInput(std::string(name) + " must be a finite positive number");
}

AsymptoticValue make(SignedLogReal v, ExponentRecord e, std::string validity, Form form) {
  if (!v.is_zero() && !std::isfinite(v.log_abs())) throw NumericalFailure("asymptotic value is not finite");
  return {v, e, std::move(validity), form};
}

AsymptoticValue make_log(double log_v, ExponentRecord e, std::string validity, Form form, int sign = 1) {
  return make(SignedLogReal::from_log(log_v, sign), e, std::move(validity), form);
}

[[noreturn]] void no_form(const char* op, Form f) {
  throw InvalidInput(std::string(op) + " has no " + form_name(f) + " form");
}

double log_hermite_unweighted(int m, double q) {
  return exact::unweighted_norm_quad(PolynomialFamily::hermite(), m, q).value.log_abs();
}

double log_hermite_weighted(int n, double q) {
  return exact::weighted_norm_quad(PolynomialFamily::hermite(), n, q).value.log_abs();
}

// E[H_n] / kappa_n^H, with E = -int H^2 e^{-x^2} ln H^2.
double hermite_entropy_ratio(int n) {
  auto h = PolynomialFamily::hermite();
  return (info::functional_E(h, n) / norm_constant_log(h, n)).to_double();
}

double log_kappa(const PolynomialFamily& f, int n) { return norm_constant_log(f, n).log_abs(); }

// ln C_n^{(lambda)}(1) = ln[(2 lambda)_n / n!]
double log_gegenbauer_at_one(int n, double lambda) { return lg(n + 2 * lambda) - lg(2 * lambda) - lf(n); }

}  // namespace

std::string form_name(Form f) {
  switch (f) {
    case Form::limit: return "limit";
    case Form::printed: return "printed";
    default: return "printed-simplified";
  }
}

Form parse_form(const std::string& s) {
  if (s == "limit") return Form::limit;
  if (s == "printed") return Form::printed;
  if (s == "printed-simplified" || s == "printed_simplified") return Form::printed_simplified;
  throw InvalidInput("unknown form '" + s + "' (expected limit, printed or printed-simplified)");
}

double ExponentRecord::log_slope(double P) const {
  return power + exp_rate * P + self_rate * P * std::log(P) + log_power / std::log(P);
}

TemmeExpansion temme_expansion(int m, double mu, double lambda_scale, double q) {
  check_degree(m);
  need(mu > 0 && lambda_scale > 0, "mu and lambda must be positive");
  check_q(q);
  const double M = m, u = mu, l = lambda_scale;
  TemmeExpansion t{m, mu, lambda_scale, q, {}, {}};
  t.D[0] = 1;
  t.Dprime[0] = 0;
  const double d1 = M * (-2 * u + M * l + l) / (2 * l);
  t.D[1] = q * d1;
  t.Dprime[1] = d1;
  // D_2 = q m (A + B q) / (24 lambda^2)
  const double A = 24 * u * l - 4 * M * M * l * l - 6 * M * l * l - 12 * u * u - 12 * u - 2 * l * l;
  const double B = -12 * u * l * M * M - 12 * u * l * M + 3 * M * M * M * l * l + 12 * u * u * M +
                   12 * u * M + 6 * l * l * M * M + 3 * l * l * M;
  t.D[2] = q * M * (A + B * q) / (24 * l * l);
  t.Dprime[2] = M * (A + 2 * B * q) / (24 * l * l);
  return t;
}

AsymptoticValue temme_I1(int m, double alpha, double mu, double lambda_scale, double q, int order) {
  check_large(alpha, "alpha");
  need(order >= 0 && order <= 2, "Temme order must be 0, 1 or 2");
  TemmeExpansion t = temme_expansion(m, mu, lambda_scale, q);
  double sum = 0, ak = 1;
  for (int k = 0; k <= order; ++k, ak /= alpha) sum += t.D[k] * ak;
  double pref = q * m * std::log(alpha) + lg(mu) - mu * std::log(lambda_scale) - q * lf(m);
  return make(SignedLogReal::from_log(pref) * SignedLogReal::from_double(sum), {q * m, 0, 0, 0},
              "alpha -> inf; m, mu, lambda, q fixed", Form::printed);
}

AsymptoticValue temme_I2(int m, double alpha, double mu, double lambda_scale, int order) {
  check_large(alpha, "alpha");
  need(order >= 0 && order <= 2, "Temme order must be 0, 1 or 2");
  TemmeExpansion t = temme_expansion(m, mu, lambda_scale, 2.0);
  double sd = 0, sdp = 0, ak = 1;
  for (int k = 0; k <= order; ++k, ak /= alpha) {
    sd += t.D[k] * ak;
    sdp += t.Dprime[k] * ak;
  }
  double log_ratio = 2 * (m * std::log(alpha) - lf(m));
  double pref = 2 * m * std::log(alpha) + lg(mu) - mu * std::log(lambda_scale) - 2 * lf(m);
  return make(SignedLogReal::from_log(pref) * SignedLogReal::from_double(log_ratio * sd + 2 * sdp),
              {2.0 * m, 0, 0, m > 0 ? 1.0 : 0.0}, "alpha -> inf; m, mu, lambda fixed", Form::printed);
}

SignedLogReal laguerre_constant(int m, double q, Form form) {
  check_degree(m);
  check_q(q);
  if (form == Form::printed_simplified) no_form("laguerre_constant", form);
  double e = (form == Form::limit ? m * q / 2 : m * q) - 0.5;
  return SignedLogReal::from_log(log_hermite_unweighted(m, q) - q * lf(m) - e * kLn2);
}

AsymptoticValue laguerre_unweighted_param(int m, double alpha, double q, double delta, Form form) {
  check_large(alpha, "alpha");
  need(std::isfinite(delta), "delta must be finite");
  SignedLogReal c = laguerre_constant(m, q, form);
  double p = delta + (m * q + 1) / 2;
  double la = std::log(alpha);
  return make_log(c.log_abs() + alpha * (la - 1) + p * la, {p, 0, 1, 0}, "alpha -> inf; m, q, delta fixed", form);
}

AsymptoticValue laguerre_shannon_param(int m, double alpha, double delta, Form form) {
  need(m >= 1, "Laguerre Shannon asymptotics need m >= 1");
  check_large(alpha, "alpha");
  if (form == Form::printed_simplified) no_form("laguerre_shannon_param", form);
  // The printed final display carries one extra power of alpha.
  double p = delta + m + (form == Form::limit ? 0.5 : 1.5);
  double la = std::log(alpha);
  if (la == 0) return make(SignedLogReal::zero(), {p, 0, 1, 1}, "alpha -> inf; m, delta fixed", form);
  return make_log(0.5 * kLn2Pi - lf(m - 1) + alpha * (la - 1) + p * la + std::log(std::fabs(la)), {p, 0, 1, 1},
                  "alpha -> inf; m, delta fixed", form, la > 0 ? 1 : -1);
}

AsymptoticValue laguerre_weighted_param(int n, double alpha, double q, bool normalized, Form form) {
  check_degree(n);
  check_large(alpha, "alpha");
  check_q(q);
  const double la = std::log(alpha);
  const std::string validity = "alpha -> inf; n, q fixed";
  switch (form) {
    case Form::limit: {
      // L_n(alpha + sqrt(2 alpha) t) ~ (alpha/2)^{n/2} (-1)^n H_n(t) / n!
      double v = lg(q * alpha + 1) - (q * alpha + 1) * std::log(q) + n * q * (la - kLn2) + log_hermite_weighted(n, q) -
                 0.5 * (kLnPi - std::log(q)) - 2 * q * lf(n);
      if (!normalized) return make_log(v, {n * q + 0.5, 0, q, 0}, validity, form);
      v -= q * log_kappa(PolynomialFamily::laguerre(alpha), n);
      return make_log(v, {(1 - q) / 2, 0, 0, 0}, validity, form);
    }
    case Form::printed: {
      double v = 2 * q * n * la + lg(q * alpha + 1) - (q * alpha + 1) * std::log(q) - 2 * q * lf(n);
      if (!normalized) return make_log(v, {2 * q * n + 0.5, 0, q, 0}, validity, form);
      double log_kappa_asym = 0.5 * kLn2Pi - lf(n) + alpha * (la - 1) + (n + 0.5) * la;
      return make_log(v - q * log_kappa_asym, {q * (n - 0.5) + 0.5, 0, 0, 0}, validity, form);
    }
    default: {
      if (!normalized) no_form("orthogonal laguerre_weighted_param", form);
      double v = (q * (n - 0.5) + 0.5) * la - 0.5 * std::log(q) - q * lf(n) - 0.5 * (q - 1) * kLn2Pi;
      return make_log(v, {q * (n - 0.5) + 0.5, 0, 0, 0}, validity, form);
    }
  }
}

namespace {

void orient(double& alpha, double& beta, Large large) {
  if (large == Large::beta) std::swap(alpha, beta);
}

std::string jacobi_validity(Large large, const char* rest) {
  return std::string(large == Large::alpha ? "alpha -> inf; beta" : "beta -> inf; alpha") + rest;
}

// ln[2^{1+a+b} Gamma(a+1) / Gamma(a+b+2)], the Jacobi-to-Laguerre scale; exact at n = 0.
double log_jacobi_scale(double a, double b) { return (1 + a + b) * kLn2 + lg(a + 1) - lg(a + b + 2); }

}  // namespace

AsymptoticValue jacobi_unweighted_param(int n, double alpha, double beta, double q, Large large, Form form) {
  check_degree(n);
  check_q(q);
  orient(alpha, beta, large);
  check_large(alpha, "large Jacobi parameter");
  need(beta > -1, "fixed Jacobi parameter must exceed -1");
  const std::string validity = jacobi_validity(large, ", n, q fixed");
  switch (form) {
    case Form::limit: {
      // P_n(-1 + 2s/alpha) -> (-1)^n L_n^{(beta)}(s)
      double ln = n == 0 ? lg(beta + 1)
                         : exact::unweighted_norm_quad(PolynomialFamily::laguerre(beta), n, q).value.log_abs();
      return make_log(log_jacobi_scale(alpha, beta) + ln, {-beta - 1, kLn2, 0, 0}, validity, form);
    }
    case Form::printed: {
      double v = lg(alpha + n + 1) - lf(n) + lg(1 + n * q + beta) - lg(2 + alpha + n * q + beta) + (1 + alpha + beta) * kLn2;
      return make_log(v, {n - 1 - n * q - beta, kLn2, 0, 0}, validity, form);
    }
    default: no_form("jacobi_unweighted_param", form);
  }
}

AsymptoticValue jacobi_shannon_param(int n, double alpha, double beta, Large large, Form form) {
  need(n >= 1, "Jacobi Shannon asymptotics need n >= 1");
  orient(alpha, beta, large);
  check_large(alpha, "large Jacobi parameter");
  need(beta > -1, "fixed Jacobi parameter must exceed -1");
  const std::string validity = jacobi_validity(large, ", n fixed");
  switch (form) {
    case Form::limit: {
      SignedLogReal e = info::functional_E(PolynomialFamily::laguerre(beta), n);
      return make(SignedLogReal::from_log(log_jacobi_scale(alpha, beta)) * e, {-beta - 1, kLn2, 0, 0}, validity, form);
    }
    case Form::printed: {
      double bracket = digamma(1 + 2 * n + beta) - std::log(alpha);
      double v = (2 + alpha + beta) * kLn2 - (n + beta + 1) * std::log(alpha) + lg(1 + 2 * n + beta) - lg(n);
      if (bracket == 0) return make(SignedLogReal::zero(), {-n - beta - 1, kLn2, 0, 1}, validity, form);
      return make_log(v + std::log(std::fabs(bracket)), {-n - beta - 1, kLn2, 0, 1}, validity, form,
                      bracket > 0 ? 1 : -1);
    }
    default: no_form("jacobi_shannon_param", form);
  }
}

AsymptoticValue jacobi_weighted_param(int n, double alpha, double beta, double q, bool normalized, Large large,
                                      Form form) {
  check_degree(n);
  check_q(q);
  orient(alpha, beta, large);
  check_large(alpha, "large Jacobi parameter");
  need(q * beta > -1, "weighted norm diverges: need q times the fixed Jacobi parameter > -1");
  const std::string validity = jacobi_validity(large, ", n, q fixed");
  // Exact kappa is symmetric in (alpha, beta), so orientation does not matter here.
  auto log_kappa_q = [&] { return q * log_kappa(PolynomialFamily::jacobi(alpha, beta), n); };
  switch (form) {
    case Form::limit: {
      double w = n == 0 ? lg(q * beta + 1) - (q * beta + 1) * std::log(q)
                        : exact::weighted_norm_quad(PolynomialFamily::laguerre(beta), n, q).value.log_abs();
      double v = (1 + q * alpha + q * beta) * kLn2 + lg(q * alpha + 1) - lg(q * alpha + q * beta + 2) +
                 (q * beta + 1) * std::log(q) + w;
      if (!normalized) return make_log(v, {-q * beta - 1, q * kLn2, 0, 0}, validity, form);
      return make_log(v - log_kappa_q(), {q - 1, 0, 0, 0}, validity, form);
    }
    case Form::printed: {
      if (!normalized) {
        double lp1 = lg(alpha + n + 1) - lf(n) - lg(alpha + 1);
        double v = 2 * q * lp1 + (1 + q * (alpha + beta)) * kLn2 + lg(1 + q * alpha) + lg(1 + 2 * n * q + q * beta) -
                   lg(2 + q * (alpha + beta + 2 * n));
        return make_log(v, {-q * beta - 1, q * kLn2, 0, 0}, validity, form);
      }
      need(1 + 2 * n * q + n * beta > 0, "printed orthonormal display is undefined here");
      double v = (1 - q) * kLn2 - q * lf(n) - (1 + q * (beta + 2 * n)) * std::log(q) + lg(1 + 2 * n * q + n * beta) -
                 lg(beta + n + 1) + (q - 1) * std::log(alpha);
      return make_log(v, {q - 1, 0, 0, 0}, validity, form);
    }
    default: {
      if (!normalized) no_form("orthogonal jacobi_weighted_param", form);
      need(q == 2, "the simplified Jacobi display exists for q = 2 only");
      double v = lg(1 + 4 * n + 2 * beta) - 2 * (1 + 2 * n + beta) * kLn2 - 2 * lf(n) - lg(1 + n + beta) +
                 std::log(alpha);
      return make_log(v, {1, 0, 0, 0}, validity, form);
    }
  }
}

AsymptoticValue gegenbauer_unweighted_param(int n, double lambda, double q, bool normalized, Form form) {
  check_degree(n);
  check_q(q);
  check_large(lambda, "lambda");
  const std::string validity = "lambda -> inf; n, q fixed";
  const double ll = std::log(lambda);
  auto log_kappa_half_q = [&] { return 0.5 * q * log_kappa(PolynomialFamily::gegenbauer(lambda), n); };
  switch (form) {
    case Form::limit: {
      // C_n(y / sqrt(lambda)) ~ lambda^{n/2} H_n(y) / n!
      double v = lg(lambda + 0.5) - lg(lambda + 1) + 0.5 * n * q * ll + log_hermite_unweighted(n, q) - q * lf(n);
      if (!normalized) return make_log(v, {n * q / 2 - 0.5, 0, 0, 0}, validity, form);
      return make_log(v - log_kappa_half_q(), {q / 4 - 0.5, 0, 0, 0}, validity, form);
    }
    case Form::printed: {
      double v = q * log_gegenbauer_at_one(n, lambda) + lg(0.5 * (1 + n * q)) + lg(0.5 + n) - lg(1 + lambda + n * q / 2);
      if (!normalized) return make_log(v, {n * q / 2 - 0.5, 0, -1, 0}, validity, form);
      return make_log(v - log_kappa_half_q(), {q / 4 - 0.5, 0, -1, 0}, validity, form);
    }
    default: {
      double v = lg(0.5 * (1 + n * q)) - q * lf(n);
      if (!normalized) return make_log(v, {0, 0, 0, 0}, validity, form);
      return make_log(v + 0.5 * q * lf(n) + q * ll - 0.25 * q * kLnPi, {q, 0, 0, 0}, validity, form);
    }
  }
}

AsymptoticValue gegenbauer_shannon_param(int n, double lambda, bool normalized, Form form) {
  need(n >= 1, "Gegenbauer Shannon asymptotics need n >= 1");
  check_large(lambda, "lambda");
  const std::string validity = "lambda -> inf; n fixed";
  const double ll = std::log(lambda);
  const SignedLogReal kappa = norm_constant_log(PolynomialFamily::gegenbauer(lambda), n);
  switch (form) {
    case Form::limit: {
      // E[C]/kappa -> n ln(lambda) - 2 ln n! - E[H_n]/kappa^H, E[H] = -int H^2 e^{-x^2} ln H^2
      double per_mass = n * ll - 2 * lf(n) - hermite_entropy_ratio(n);
      if (normalized) return make(SignedLogReal::from_double(per_mass - kappa.log_abs()), {0, 0, 0, 1}, validity, form);
      return make(kappa * SignedLogReal::from_double(per_mass), {n - 0.5, 0, 0, 1}, validity, form);
    }
    case Form::printed: {
      double b = 2 * (log_gegenbauer_at_one(n, lambda) + 0.5 * n * digamma(n + 0.5) - 0.5 * n * digamma(n + 2 * lambda + 1));
      if (normalized) return make(SignedLogReal::from_double(b), {0, 0, 0, 1}, validity, form);
      return make(kappa * SignedLogReal::from_double(b), {n - 0.5, 0, 0, 1}, validity, form);
    }
    default: {
      if (!normalized) no_form("orthogonal gegenbauer_shannon_param", form);
      return make(SignedLogReal::from_double(2 * (n * ll + n * kLn2 - lf(n))), {0, 0, 0, 1}, validity, form);
    }
  }
}

AsymptoticValue gegenbauer_weighted_param(int n, double lambda, double q, bool normalized, Form form) {
  check_degree(n);
  check_q(q);
  check_large(lambda, "lambda");
  need(q * (lambda - 0.5) > -1, "weighted norm diverges: need q (lambda - 1/2) > -1");
  const std::string validity = "lambda -> inf; n, q fixed";
  const double ll = std::log(lambda);
  auto log_kappa_q = [&] { return q * log_kappa(PolynomialFamily::gegenbauer(lambda), n); };
  const double a = q * (lambda - 0.5);
  switch (form) {
    case Form::limit: {
      double v = 0.5 * kLnPi + lg(a + 1) - lg(a + 1.5) + n * q * ll + log_hermite_weighted(n, q) -
                 0.5 * (kLnPi - std::log(q)) - 2 * q * lf(n);
      if (!normalized) return make_log(v, {n * q - 0.5, 0, 0, 0}, validity, form);
      return make_log(v - log_kappa_q(), {(q - 1) / 2, 0, 0, 0}, validity, form);
    }
    case Form::printed: {
      // The parity factor 1 + (-1)^{2nq} is 2: the integrand is even in x.
      double v = 2 * q * log_gegenbauer_at_one(n, lambda) + lg(0.5 + n * q) + lg(1 + a) - lg(1.5 + q * n + a);
      if (!normalized) return make_log(v, {n * q - 0.5, 0, 0, 0}, validity, form);
      return make_log(v - log_kappa_q(), {(q - 1) / 2, 0, 0, 0}, validity, form);
    }
    default: {
      if (!normalized) {
        double v = kLn2 + lg(0.5 + n * q) + 2 * n * q * kLn2 - (0.5 + n * q) * std::log(q) - 2 * q * lf(n) +
                   (n * q - 0.5) * ll;
        return make_log(v, {n * q - 0.5, 0, 0, 0}, validity, form);
      }
      double v = kLn2 + (n * q - 1) * kLn2 + lg(0.5 + n * q) - (0.5 + n * q) * std::log(q) - 0.5 * q * kLnPi -
                 q * lf(n) + 0.5 * (q - 1) * ll;
      return make_log(v, {(q - 1) / 2, 0, 0, 0}, validity, form);
    }
  }
}

}  // namespace hopnorms::param
