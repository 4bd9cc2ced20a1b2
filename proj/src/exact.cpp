#include "hopnorms/exact.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "hopnorms/errors.hpp"
#include "hopnorms/polykernel.hpp"
#include "hopnorms/special.hpp"

namespace hopnorms {

std::string method_name(Method m) {
  switch (m) {
    case Method::quadrature: return "quadrature";
    case Method::bell: return "bell";
    case Method::asymptotic_q: return "asymptotic-q";
    default: return "asymptotic-parameter";
  }
}

namespace exact {

namespace {

void check_q(double q) {
  if (!(q > 0) || !std::isfinite(q)) throw InvalidInput("q must be a finite positive number");
}

void check_n(int n) {
  if (n < 0) throw InvalidInput("degree must be nonnegative");
}

int sign_at(const PolynomialFamily& f, int n, double x) { return eval_log(f, n, x).sign(); }

std::pair<double, double> scan_range(const PolynomialFamily& f, int n) {
  switch (f.kind()) {
    case FamilyKind::hermite: {
      double r = std::sqrt(4.0 * n + 6);
      return {-r, r};
    }
    case FamilyKind::laguerre: return {0.0, 4.0 * n + 2 * f.alpha() + 6};
    default: return {-1.0, 1.0};
  }
}

double bisect_zero(const PolynomialFamily& f, int n, double a, double b, int sa) {
  for (int it = 0; it < 200; ++it) {
    double m = 0.5 * (a + b);
    if (!(m > a && m < b)) break;
    int sm = sign_at(f, n, m);
    if (sm == 0) return m;
    if (sm == sa) {
      a = m;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

// Visits every multiplicity vector (j_k over the given part sizes) with
// sum_k j_k = count and sum_k k j_k = total. Part sizes must be descending.
void enumerate_partitions(const std::vector<int>& parts, int total, int count,
                          const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> j(parts.size(), 0);
  std::function<void(size_t, int, int)> rec = [&](size_t idx, int rs, int rc) {
    if (idx == parts.size()) {
      if (rs == 0 && rc == 0) visit(j);
      return;
    }
    int k = parts[idx];
    int next_max = idx + 1 < parts.size() ? parts[idx + 1] : 0;
    int min_part = parts.back();
    int jmax = std::min(rc, rs / k);
    for (int jj = jmax; jj >= 0; --jj) {
      int rs2 = rs - jj * k, rc2 = rc - jj;
      if (rs2 > rc2 * next_max) break;  // smaller parts cannot absorb the rest
      if (rs2 < rc2 * min_part) continue;
      j[idx] = jj;
      rec(idx + 1, rs2, rc2);
    }
    j[idx] = 0;
  };
  rec(0, total, count);
}

struct CompensatedLD {
  long double sum = 0, comp = 0;
  void add(long double v) {
    long double t = sum + v;
    comp += fabsl(sum) >= fabsl(v) ? (sum - t) + v : (v - t) + sum;
    sum = t;
  }
  long double value() const { return sum + comp; }
};

}  // namespace

std::vector<double> polynomial_zeros(const PolynomialFamily& f, int n) {
  check_n(n);
  if (n == 0) return {};
  auto [lo, hi] = scan_range(f, n);
  for (int points = std::max(4 * n, 16); points <= 8192 * (n + 1); points *= 2) {
    std::vector<double> xs;
    xs.reserve(points + 2);
    if (f.support().lower_finite()) xs.push_back(lo);
    for (int k = 0; k < points; ++k)
      xs.push_back(0.5 * (lo + hi) - 0.5 * (hi - lo) * std::cos(std::numbers::pi * (k + 0.5) / points));
    if (f.support().upper_finite()) xs.push_back(hi);

    std::vector<double> zeros;
    int prev_sign = sign_at(f, n, xs[0]);
    if (prev_sign == 0 && !f.support().lower_finite()) zeros.push_back(xs[0]);
    for (size_t i = 1; i < xs.size(); ++i) {
      int s = sign_at(f, n, xs[i]);
      if (s == 0) {
        if (i + 1 < xs.size() || !f.support().upper_finite()) zeros.push_back(xs[i]);
      } else if (prev_sign != 0 && s != prev_sign) {
        zeros.push_back(bisect_zero(f, n, xs[i - 1], xs[i], prev_sign));
      }
      if (s != 0) prev_sign = s;
    }
    if (int(zeros.size()) == n) return zeros;
  }
  throw NumericalFailure("could not locate all " + std::to_string(n) + " zeros of " + f.describe());
}

IntegrationProblem problem_for(const PolynomialFamily& f, int n, LogIntegrand g, double lower_exponent,
                               double upper_exponent) {
  IntegrationProblem p;
  p.f = std::move(g);
  p.support = f.support();
  p.breakpoints = polynomial_zeros(f, n);
  p.lower_exponent = lower_exponent;
  p.upper_exponent = upper_exponent;
  p.anchor = f.kind() == FamilyKind::laguerre ? f.alpha() + 1 : 0.0;
  if (p.anchor < 0) p.anchor = 0;
  return p;
}

NormResult unweighted_norm_quad(const PolynomialFamily& f, int n, double q, const QuadratureConfig& cfg) {
  check_n(n);
  check_q(q);
  auto g = [&f, n, q](const SupportPoint& pt) -> SignedLogReal {
    SignedLogReal p = eval_log(f, n, pt.x);
    if (p.is_zero()) return p;
    SignedLogReal h = weight_log(f, pt);
    if (h.is_zero()) return h;
    return SignedLogReal::from_log(q * p.log_abs() + h.log_abs());
  };
  QuadratureResult r = integrate(problem_for(f, n, g, f.lower_exponent(), f.upper_exponent()), cfg);
  return {r.value, Method::quadrature, r.rel_error};
}

NormResult weighted_norm_quad(const PolynomialFamily& f, int n, double q, const QuadratureConfig& cfg,
                              bool normalized) {
  check_n(n);
  check_q(q);
  if (!(q * f.lower_exponent() > -1) || !(q * f.upper_exponent() > -1))
    throw InvalidInput("weighted norm diverges at an endpoint: need q times the weight exponent > -1");
  auto g = [&f, n, q](const SupportPoint& pt) -> SignedLogReal {
    SignedLogReal p = eval_log(f, n, pt.x);
    if (p.is_zero()) return p;
    SignedLogReal h = weight_log(f, pt);
    if (h.is_zero()) return h;
    return SignedLogReal::from_log(q * (2 * p.log_abs() + h.log_abs()));
  };
  QuadratureResult r =
      integrate(problem_for(f, n, g, q * f.lower_exponent(), q * f.upper_exponent()), cfg);
  SignedLogReal v = r.value;
  if (normalized) v /= norm_constant_log(f, n).pow(q);
  return {v, Method::quadrature, r.rel_error};
}

SignedLogReal weight_moment_log(const PolynomialFamily& f, int t) {
  if (t < 0) throw InvalidInput("moment order must be nonnegative");
  switch (f.kind()) {
    case FamilyKind::hermite:
      if (t % 2) return SignedLogReal::zero();
      return SignedLogReal::from_log(log_gamma(t / 2 + 0.5));
    case FamilyKind::laguerre: return SignedLogReal::from_log(log_gamma(1 + f.alpha() + t));
    default: break;
  }
  double a, b;
  if (f.kind() == FamilyKind::jacobi) {
    a = f.alpha();
    b = f.beta();
  } else {
    a = b = f.lambda() - 0.5;
  }
  if (a == b && t % 2) return SignedLogReal::zero();
  // Two endpoint contributions; the one anchored at -1 carries (-1)^t.
  SignedLogReal left = SignedLogReal::from_log(log_gamma(1 + b) - log_gamma(2 + t + b), t % 2 ? -1 : 1) *
                       SignedLogReal::from_double(gauss_2f1_neg1(-a, t + 1.0, 2.0 + t + b));
  SignedLogReal right = SignedLogReal::from_log(log_gamma(1 + a) - log_gamma(2 + t + a)) *
                        SignedLogReal::from_double(gauss_2f1_neg1(-b, t + 1.0, 2.0 + t + a));
  return SignedLogReal::from_log(log_gamma(1.0 + t)) * (left + right);
}

double weight_moment(const PolynomialFamily& f, int t) { return weight_moment_log(f, t).to_double(); }

double bell_polynomial(int m, int l, std::span<const double> args) {
  if (!(l >= 1 && l <= m)) throw InvalidInput("bell_polynomial requires 1 <= l <= m");
  if (int(args.size()) != m - l + 1) throw InvalidInput("bell_polynomial expects m - l + 1 arguments");
  std::vector<int> parts;
  for (int k = m - l + 1; k >= 1; --k)
    if (args[k - 1] != 0.0) parts.push_back(k);
  if (parts.empty()) return 0.0;
  CompensatedLD acc;
  const long double log_mfact = lgammal(m + 1.0L);
  enumerate_partitions(parts, m, l, [&](const std::vector<int>& j) {
    long double lg = log_mfact;
    int sign = 1;
    for (size_t i = 0; i < parts.size(); ++i) {
      if (!j[i]) continue;
      int k = parts[i];
      long double x = args[k - 1];
      if (x < 0 && j[i] % 2) sign = -sign;
      lg += j[i] * (logl(fabsl(x)) - lgammal(k + 1.0L)) - lgammal(j[i] + 1.0L);
    }
    acc.add(sign * expl(lg));
  });
  return double(acc.value());
}

NormResult unweighted_norm_bell(const PolynomialFamily& f, int n, int q) {
  check_n(n);
  if (q <= 0 || q % 2) throw InvalidInput("the Bell engine needs a positive even integer q");
  if (n * q > 240) throw InvalidInput("the Bell engine is validated for n*q <= 240");
  CoefficientList cl = coefficients(f, n);
  // Parts are k = index + 1 of the coefficient c_{k-1}; the argument of B is k! c_{k-1}.
  std::vector<int> parts;
  for (int k = n + 1; k >= 1; --k)
    if (cl.c[k - 1] != 0.0) parts.push_back(k);

  CompensatedLD total, magnitude;
  const long double log_qfact = lgammal(q + 1.0L);
  for (int t = 0; t <= n * q; ++t) {
    SignedLogReal mu = weight_moment_log(f, t);
    if (mu.is_zero()) continue;
    // q!/(t+q)! B_{t+q,q}(1! c_0, 2! c_1, ...) reduces per partition to
    // q!/prod j_k! * prod c_{k-1}^{j_k}.
    CompensatedLD bt;
    enumerate_partitions(parts, t + q, q, [&](const std::vector<int>& j) {
      long double lg = log_qfact;
      int sign = 1;
      for (size_t i = 0; i < parts.size(); ++i) {
        if (!j[i]) continue;
        long double c = cl.c[parts[i] - 1];
        if (c < 0 && j[i] % 2) sign = -sign;
        lg += j[i] * logl(fabsl(c)) - lgammal(j[i] + 1.0L);
      }
      long double term = sign * expl(lg + (long double)mu.log_abs());
      bt.add(term);
      magnitude.add(fabsl(term));
    });
    total.add(mu.sign() * bt.value());
  }
  long double v = total.value();
  if (!(v > 0)) throw NumericalFailure("Bell evaluation lost all significance");
  double cancellation = double(magnitude.value() / v);
  return {SignedLogReal::from_log(double(logl(v))), Method::bell, 1e-15 * std::max(1.0, cancellation)};
}

}  // namespace exact
}  // namespace hopnorms
