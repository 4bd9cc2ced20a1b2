#include "hopnorms/laplace.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "hopnorms/errors.hpp"
#include "hopnorms/polykernel.hpp"
#include "hopnorms/special.hpp"

namespace hopnorms::laplace {

namespace {

constexpr double kJacobiEdge = 1e-9;

// Jacobi parameters equivalent to the family (Gegenbauer is symmetric Jacobi
// up to a constant factor that does not move the maximizers).
std::pair<double, double> jacobi_exponents(const PolynomialFamily& f) {
  if (f.kind() == FamilyKind::jacobi) return {f.alpha(), f.beta()};
  double a = f.lambda() - 0.5;
  return {a, a};
}

void check_preconditions(const PolynomialFamily& f, int n) {
  if (n < 0) throw InvalidInput("degree must be nonnegative");
  switch (f.kind()) {
    case FamilyKind::hermite: return;
    case FamilyKind::laguerre:
      if (!(f.alpha() > 0)) throw InvalidInput("Laplace asymptotics for Laguerre need alpha > 0");
      return;
    case FamilyKind::jacobi:
      if (!(f.alpha() > 0 && f.beta() > 0))
        throw InvalidInput("Laplace asymptotics for Jacobi need alpha > 0 and beta > 0");
      return;
    case FamilyKind::gegenbauer:
      if (!(f.lambda() > 0.5)) throw InvalidInput("Laplace asymptotics for Gegenbauer need lambda > 1/2");
      return;
  }
}

// f'(x) multiplied by a factor that is positive on the interior and clears the
// poles: Hermite p(2p' - 2xp)... written without the p factor, i.e.
//   Hermite   2p' - 2x p
//   Laguerre  2x p' + (alpha - x) p
//   Jacobi    2(1-x^2) p' + (beta(1-x) - alpha(1+x)) p
// Zeros of p are not roots (p' != 0 there), so roots are exactly critical points.
int critical_sign(const PolynomialFamily& f, int n, double x) {
  SignedLogReal p = eval_log(f, n, x);
  SignedLogReal dp = eval_derivative_log(f, n, x);
  SignedLogReal g;
  switch (f.kind()) {
    case FamilyKind::hermite:
      g = SignedLogReal::from_double(2.0) * dp + SignedLogReal::from_double(-2 * x) * p;
      break;
    case FamilyKind::laguerre:
      g = SignedLogReal::from_double(2 * x) * dp + SignedLogReal::from_double(f.alpha() - x) * p;
      break;
    default: {
      auto [a, b] = jacobi_exponents(f);
      double omx = 1 - x, opx = 1 + x;
      g = SignedLogReal::from_double(2 * omx * opx) * dp + SignedLogReal::from_double(b * omx - a * opx) * p;
      break;
    }
  }
  return g.sign();
}

double log_density(const PolynomialFamily& f, int n, double x) {
  SignedLogReal p = eval_log(f, n, x);
  SignedLogReal h = weight_log(f, x);
  if (p.is_zero() || h.is_zero()) return -INFINITY;
  return 2 * p.log_abs() + h.log_abs();
}

std::pair<double, double> scan_range(const PolynomialFamily& f, int n) {
  switch (f.kind()) {
    case FamilyKind::hermite: {
      double r = std::sqrt(4.0 * n + 6);
      return {-r, r};
    }
    case FamilyKind::laguerre: return {0.0, 4.0 * n + 2 * f.alpha() + 6};
    default: return {-1 + kJacobiEdge, 1 - kJacobiEdge};
  }
}

std::vector<double> critical_points(const PolynomialFamily& f, int n) {
  auto [lo, hi] = scan_range(f, n);
  for (int points = 8 * (n + 2); points <= 8 * (n + 2) * 4096; points *= 2) {
    std::vector<double> xs;
    for (int k = 0; k < points; ++k)
      xs.push_back(0.5 * (lo + hi) - 0.5 * (hi - lo) * std::cos(std::numbers::pi * (k + 0.5) / points));
    std::vector<double> roots;
    int prev = critical_sign(f, n, xs[0]);
    for (size_t i = 1; i < xs.size(); ++i) {
      int s = critical_sign(f, n, xs[i]);
      if (s == 0) {
        roots.push_back(xs[i]);
        continue;
      }
      if (prev != 0 && s != prev) {
        double a = xs[i - 1], b = xs[i];
        int sa = prev;
        for (int it = 0; it < 200; ++it) {
          double m = 0.5 * (a + b);
          if (!(m > a && m < b)) break;
          int sm = critical_sign(f, n, m);
          if (sm == 0) {
            a = b = m;
            break;
          }
          (sm == sa ? a : b) = m;
        }
        roots.push_back(0.5 * (a + b));
      }
      prev = s;
    }
    if (int(roots.size()) >= n + 1) return roots;
  }
  throw NumericalFailure("no interior critical point of the log-density was found for " + f.describe());
}

double log_sqrt_laplace(double q, double f2) { return 0.5 * std::log(2 * std::numbers::pi / (-q * f2)); }

}  // namespace

double second_derivative_at_critical(const PolynomialFamily& f, int n, double x) {
  switch (f.kind()) {
    case FamilyKind::hermite: return 2 * x * x - 4.0 * n - 2;
    case FamilyKind::laguerre: {
      double a = f.alpha();
      return a * a / (2 * x * x) - (2.0 * n + a + 1) / x + 0.5;
    }
    default: {
      auto [a, b] = jacobi_exponents(f);
      double omx = 1 - x, opx = 1 + x, w = omx * opx;
      return -(a + a * a / 2) / (omx * omx) - (b + b * b / 2) / (opx * opx) + a * b / w -
             2.0 * n * (n + a + b + 1) / w + (b - a - (a + b + 2) * x) / w * (b / opx - a / omx);
    }
  }
}

double stationarity_residual(const PolynomialFamily& f, int n, double x) {
  double p = eval(f, n, x);
  return std::fabs(eval_derivative(f, n, x) / p + 0.5 * weight_log_derivative(f, x));
}

LaplacePoint locate_density_maximum(const PolynomialFamily& f, int n) {
  check_preconditions(f, n);
  std::vector<double> roots = critical_points(f, n);
  std::vector<double> values;
  for (double r : roots) values.push_back(log_density(f, n, r));
  double best = *std::max_element(values.begin(), values.end());
  LaplacePoint lp;
  lp.f_at_x0 = best;
  lp.multiplicity = 0;
  for (size_t i = 0; i < roots.size(); ++i) {
    if (std::fabs(values[i] - best) <= 1e-10 * std::max(1.0, std::fabs(best))) {
      lp.maximizers.push_back(roots[i]);
      ++lp.multiplicity;
    }
  }
  lp.x0 = lp.maximizers.back();
  lp.f2_at_x0 = second_derivative_at_critical(f, n, lp.x0);
  if (f.kind() == FamilyKind::gegenbauer) lp.f_at_x0 = log_density(f, n, lp.x0);
  if (!(lp.f2_at_x0 < 0)) throw NumericalFailure("density maximum is not strict");
  return lp;
}

NormResult weighted_norm_q_asym(const PolynomialFamily& f, int n, double q) {
  if (!(q > 0) || !std::isfinite(q)) throw InvalidInput("q must be a finite positive number");
  LaplacePoint lp = locate_density_maximum(f, n);
  double v = std::log(double(lp.multiplicity)) + q * lp.f_at_x0 + log_sqrt_laplace(q, lp.f2_at_x0);
  return {SignedLogReal::from_log(v), Method::asymptotic_q, 1.0 / q};
}

NormResult unweighted_norm_q_asym_jacobi(int n, double alpha, double beta, double q) {
  if (n < 1) throw InvalidInput("the endpoint asymptotics need n >= 1");
  if (!(q > 0) || !std::isfinite(q)) throw InvalidInput("q must be a finite positive number");
  if (!(alpha > -1 && beta > -1)) throw InvalidInput("Jacobi requires alpha > -1 and beta > -1");
  if (!(std::max(alpha, beta) >= -0.5)) throw InvalidInput("endpoint asymptotics need max(alpha, beta) >= -1/2");
  // Near the endpoint where |P| is largest, |P|^q ~ P(end)^q e^{-q a t} with
  // a = |P'(end)/P(end)| = n(n+alpha+beta+1) / (2(s+1)), s the exponent there.
  auto endpoint_term = [&](double s, double other) {
    double log_p_end = log_pochhammer(s + 1, n) - log_factorial(n);
    double inv_a = 2 * (s + 1) / ((n + alpha + beta + 1) * n);
    return q * log_p_end + other * std::numbers::ln2 + log_gamma(s + 1) + (s + 1) * std::log(inv_a) -
           (s + 1) * std::log(q);
  };
  double v;
  if (alpha > beta) {
    v = endpoint_term(alpha, beta);
  } else if (beta > alpha) {
    v = endpoint_term(beta, alpha);
  } else {
    v = std::numbers::ln2 + endpoint_term(alpha, beta);
  }
  return {SignedLogReal::from_log(v), Method::asymptotic_q, 1.0 / q};
}

NormResult unweighted_norm_q_asym(const PolynomialFamily& f, int n, double q) {
  switch (f.kind()) {
    case FamilyKind::jacobi: return unweighted_norm_q_asym_jacobi(n, f.alpha(), f.beta(), q);
    case FamilyKind::gegenbauer: {
      double a = f.lambda() - 0.5;
      NormResult r = unweighted_norm_q_asym_jacobi(n, a, a, q);
      r.value *= gegenbauer_jacobi_ratio_log(f.lambda(), n).abs().pow(q);
      return r;
    }
    default:
      throw UnsupportedByTheory("q -> infinity asymptotics of unweighted norms are not available for " + f.name());
  }
}

}  // namespace hopnorms::laplace
