#include "hopnorms/polykernel.hpp"

#include <cmath>
#include <numbers>

#include "hopnorms/errors.hpp"
#include "hopnorms/special.hpp"

namespace hopnorms {

namespace {

constexpr double kRescaleHigh = 1e280;
constexpr double kRescaleLow = 1e-280;

void check_degree(int n) {
  if (n < 0) throw InvalidInput("degree must be nonnegative");
}

void check_in_closure(const PolynomialFamily& f, double x) {
  if (std::isnan(x)) throw InvalidInput("x is NaN");
  Support s = f.support();
  if (x < s.lower || x > s.upper) throw InvalidInput("x outside the support of " + f.describe());
}

// One step p_k = (a x + b) p_{k-1} - c p_{k-2}, expressed through the
// family-specific coefficients below. Index k >= 2.
struct Step {
  double a, b, c;
};

Step step_coefficients(const PolynomialFamily::Params& p, int k) {
  if (std::holds_alternative<Hermite>(p)) return {2.0, 0.0, 2.0 * (k - 1)};
  if (auto* l = std::get_if<Laguerre>(&p)) {
    double al = l->alpha;
    return {-1.0 / k, (2.0 * k - 1 + al) / k, (k - 1 + al) / k};
  }
  if (auto* j = std::get_if<Jacobi>(&p)) {
    double al = j->alpha, be = j->beta, s = al + be;
    double den = 2.0 * k * (k + s) * (2.0 * k + s - 2);
    double m = 2.0 * k + s - 1;
    return {m * (2.0 * k + s) * (2.0 * k + s - 2) / den, m * (al * al - be * be) / den,
            2.0 * (k + al - 1) * (k + be - 1) * (2.0 * k + s) / den};
  }
  double la = std::get<Gegenbauer>(p).lambda;
  return {2.0 * (k - 1 + la) / k, 0.0, (k + 2.0 * la - 2) / k};
}

double first_degree(const PolynomialFamily::Params& p, double x) {
  if (std::holds_alternative<Hermite>(p)) return 2 * x;
  if (auto* l = std::get_if<Laguerre>(&p)) return 1 + l->alpha - x;
  if (auto* j = std::get_if<Jacobi>(&p)) return (j->alpha + 1) + (j->alpha + j->beta + 2) * (x - 1) / 2;
  return 2 * std::get<Gegenbauer>(p).lambda * x;
}

// Linear coefficients (b0 + b1 x) of p_1.
std::pair<double, double> first_degree_coefficients(const PolynomialFamily::Params& p) {
  if (std::holds_alternative<Hermite>(p)) return {0.0, 2.0};
  if (auto* l = std::get_if<Laguerre>(&p)) return {1 + l->alpha, -1.0};
  if (auto* j = std::get_if<Jacobi>(&p)) {
    double s = j->alpha + j->beta + 2;
    return {(j->alpha + 1) - s / 2, s / 2};
  }
  return {0.0, 2 * std::get<Gegenbauer>(p).lambda};
}

SignedLogReal eval_log_params(const PolynomialFamily::Params& p, int n, double x) {
  if (n == 0) return SignedLogReal::one();
  double prev = 1.0;
  double cur = first_degree(p, x);
  double scale = 0.0;
  for (int k = 2; k <= n; ++k) {
    Step s = step_coefficients(p, k);
    double next = (s.a * x + s.b) * cur - s.c * prev;
    prev = cur;
    cur = next;
    double mag = std::fmax(std::fabs(cur), std::fabs(prev));
    if (mag > kRescaleHigh || (mag < kRescaleLow && mag > 0)) {
      prev /= mag;
      cur /= mag;
      scale += std::log(mag);
    }
  }
  SignedLogReal r = SignedLogReal::from_double(cur);
  if (r.is_zero()) return r;
  return SignedLogReal::from_log(r.log_abs() + scale, r.sign());
}

// Plain double recurrence; NaN when an intermediate leaves the safe range.
double eval_params(const PolynomialFamily::Params& p, int n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0;
  double cur = first_degree(p, x);
  for (int k = 2; k <= n; ++k) {
    Step s = step_coefficients(p, k);
    double next = (s.a * x + s.b) * cur - s.c * prev;
    prev = cur;
    cur = next;
    if (std::fabs(cur) > kRescaleHigh) return NAN;
  }
  return cur;
}

// Parameters of the family whose degree n-1 member is proportional to p_n'.
PolynomialFamily::Params derivative_params(const PolynomialFamily::Params& p) {
  if (auto* l = std::get_if<Laguerre>(&p)) return Laguerre{l->alpha + 1};
  if (auto* j = std::get_if<Jacobi>(&p)) return Jacobi{j->alpha + 1, j->beta + 1};
  if (auto* g = std::get_if<Gegenbauer>(&p)) return Gegenbauer{g->lambda + 1};
  return Hermite{};
}

double derivative_factor(const PolynomialFamily::Params& p, int n) {
  if (std::holds_alternative<Hermite>(p)) return 2.0 * n;
  if (std::holds_alternative<Laguerre>(p)) return -1.0;
  if (auto* j = std::get_if<Jacobi>(&p)) return (n + j->alpha + j->beta + 1) / 2;
  return 2 * std::get<Gegenbauer>(p).lambda;
}

}  // namespace

double CoefficientList::horner(double x) const {
  double r = 0.0;
  for (auto it = c.rbegin(); it != c.rend(); ++it) r = r * x + *it;
  return r;
}

SignedLogReal eval_log(const PolynomialFamily& f, int n, double x) {
  check_degree(n);
  check_in_closure(f, x);
  return eval_log_params(f.params(), n, x);
}

double eval(const PolynomialFamily& f, int n, double x) {
  check_degree(n);
  check_in_closure(f, x);
  double v = eval_params(f.params(), n, x);
  return std::isnan(v) ? eval_log_params(f.params(), n, x).to_double() : v;
}

SignedLogReal eval_derivative_log(const PolynomialFamily& f, int n, double x) {
  check_degree(n);
  check_in_closure(f, x);
  if (n == 0) return SignedLogReal::zero();
  return SignedLogReal::from_double(derivative_factor(f.params(), n)) * eval_log_params(derivative_params(f.params()), n - 1, x);
}

double eval_derivative(const PolynomialFamily& f, int n, double x) {
  check_degree(n);
  check_in_closure(f, x);
  if (n == 0) return 0.0;
  double v = eval_params(derivative_params(f.params()), n - 1, x);
  if (std::isnan(v)) return eval_derivative_log(f, n, x).to_double();
  return derivative_factor(f.params(), n) * v;
}

SignedLogReal norm_constant_log(const PolynomialFamily& f, int n) {
  check_degree(n);
  const double ln2 = std::numbers::ln2;
  const double lnpi = std::log(std::numbers::pi);
  double v = 0.0;
  switch (f.kind()) {
    case FamilyKind::hermite: v = 0.5 * lnpi + log_factorial(n) + n * ln2; break;
    case FamilyKind::laguerre: v = log_gamma(n + f.alpha() + 1) - log_factorial(n); break;
    case FamilyKind::jacobi: {
      double a = f.alpha(), b = f.beta();
      if (n == 0) {
        v = (a + b + 1) * ln2 + log_gamma(a + 1) + log_gamma(b + 1) - log_gamma(a + b + 2);
      } else {
        v = (a + b + 1) * ln2 + log_gamma(n + a + 1) + log_gamma(n + b + 1) - log_factorial(n) -
            std::log(2.0 * n + a + b + 1) - log_gamma(n + a + b + 1);
      }
      break;
    }
    case FamilyKind::gegenbauer: {
      double l = f.lambda();
      if (n == 0) {
        v = -2 * l * ln2 + lnpi + log_gamma(2 * l + 1) - 2 * log_gamma(l + 1);
      } else {
        v = (1 - 2 * l) * ln2 + lnpi + log_gamma(n + 2 * l) + 2 * std::log(std::fabs(l)) -
            2 * log_gamma(l + 1) - std::log(n + l) - log_factorial(n);
      }
      break;
    }
  }
  return SignedLogReal::from_log(v);
}

CoefficientList coefficients(const PolynomialFamily& f, int n) {
  check_degree(n);
  if (n > kMaxCoefficientDegree) throw InvalidInput("coefficients: degree above the supported cap of 60");
  const auto& p = f.params();
  std::vector<double> prev{1.0};
  if (n == 0) return {0, prev};
  auto [b0, b1] = first_degree_coefficients(p);
  std::vector<double> cur{b0, b1};
  for (int k = 2; k <= n; ++k) {
    Step s = step_coefficients(p, k);
    std::vector<double> next(k + 1, 0.0);
    for (int i = 0; i < k; ++i) {
      next[i + 1] += s.a * cur[i];
      next[i] += s.b * cur[i];
    }
    for (int i = 0; i < k - 1; ++i) next[i] -= s.c * prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return {n, cur};
}

SignedLogReal weight_log(const PolynomialFamily& f, double x) {
  check_in_closure(f, x);
  return weight_log(f, f.point(x));
}

SignedLogReal weight_log(const PolynomialFamily& f, const SupportPoint& pt) {
  // power^exponent in log form with the 0^0 = 1 convention
  auto endpoint_term = [](double dist, double expo) -> double {
    if (expo == 0.0) return 0.0;
    if (dist > 0) return expo * std::log(dist);
    if (expo > 0) return -std::numeric_limits<double>::infinity();
    throw SingularEvaluation("weight has a pole at this endpoint");
  };
  double x = pt.x;
  switch (f.kind()) {
    case FamilyKind::hermite: return SignedLogReal::from_log(-x * x);
    case FamilyKind::laguerre:
      return SignedLogReal::from_log(endpoint_term(pt.from_lower, f.alpha()) - x);
    default:
      return SignedLogReal::from_log(endpoint_term(pt.from_upper, f.upper_exponent()) +
                                     endpoint_term(pt.from_lower, f.lower_exponent()));
  }
}

double weight_log_derivative(const PolynomialFamily& f, double x) {
  check_in_closure(f, x);
  return weight_log_derivative(f, f.point(x));
}

double weight_log_derivative(const PolynomialFamily& f, const SupportPoint& pt) {
  switch (f.kind()) {
    case FamilyKind::hermite: return -2 * pt.x;
    case FamilyKind::laguerre: {
      double a = f.alpha();
      if (a == 0.0) return -1.0;
      if (!(pt.from_lower > 0)) throw SingularEvaluation("h'/h has a pole at x = 0");
      return a / pt.from_lower - 1.0;
    }
    default: {
      double up = f.upper_exponent(), lo = f.lower_exponent();
      double r = 0.0;
      if (up != 0.0) {
        if (!(pt.from_upper > 0)) throw SingularEvaluation("h'/h has a pole at x = 1");
        r -= up / pt.from_upper;
      }
      if (lo != 0.0) {
        if (!(pt.from_lower > 0)) throw SingularEvaluation("h'/h has a pole at x = -1");
        r += lo / pt.from_lower;
      }
      return r;
    }
  }
}

SignedLogReal gegenbauer_jacobi_ratio_log(double lambda, int n) {
  check_degree(n);
  // Gamma(l+1/2) Gamma(n+2l) / (Gamma(2l) Gamma(n+l+1/2)); Gamma(2l) may have
  // a negative argument, so use Gamma(n+2l)/Gamma(2l) = (2l)_n.
  double lv = log_gamma(lambda + 0.5) - log_gamma(n + lambda + 0.5);
  int sign = 1;
  for (int k = 0; k < n; ++k) {
    double t = 2 * lambda + k;
    if (t < 0) sign = -sign;
    lv += std::log(std::fabs(t));
  }
  return SignedLogReal::from_log(lv, sign);
}

double log_jacobi_at_plus_one(double alpha, int n) { return log_pochhammer(alpha + 1, n) - log_factorial(n); }

}  // namespace hopnorms
