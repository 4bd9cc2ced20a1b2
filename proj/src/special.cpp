#include "hopnorms/special.hpp"

#include <boost/math/special_functions/digamma.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "hopnorms/errors.hpp"

namespace hopnorms {

namespace {

constexpr long kDirectTermCap = 100000;

bool is_nonpositive_integer(double v) { return v <= 0 && v == std::floor(v); }

// Plain partial sums of the series at z; returns false if the cap is reached.
bool sum_series(double a, double b, double c, double z, long cap, double& out) {
  double term = 1.0;
  double sum = 1.0;
  double comp = 0.0;  // Neumaier compensation
  for (long k = 0; k < cap; ++k) {
    term *= (a + k) * (b + k) / ((c + k) * (k + 1)) * z;
    if (term == 0.0) {
      out = sum + comp;
      return true;
    }
    double t = sum + term;
    comp += std::fabs(sum) >= std::fabs(term) ? (sum - t) + term : (term - t) + sum;
    sum = t;
    if (std::fabs(term) <= 1e-17 * std::fabs(sum + comp) && k > 4) {
      out = sum + comp;
      return true;
    }
  }
  out = sum + comp;
  return false;
}

}  // namespace

double log_gamma(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw InvalidInput("log_gamma requires finite x > 0");
  return boost::math::lgamma(x);
}

double digamma(double x) {
  if (!(x > 0) || !std::isfinite(x)) throw InvalidInput("digamma requires finite x > 0");
  return boost::math::digamma(x);
}

double gauss_2f1_neg1(double a, double b, double c) {
  if (is_nonpositive_integer(c)) throw InvalidInput("2F1: c must not be a nonpositive integer");
  const bool terminates = is_nonpositive_integer(a) || is_nonpositive_integer(b);
  if (!terminates && !(c - a - b > 0)) throw InvalidInput("2F1 at -1 requires c - a - b > 0");
  double direct;
  if (sum_series(a, b, c, -1.0, kDirectTermCap, direct)) return direct;
  // Pfaff: 2F1(a,b;c;-1) = 2^{-b} 2F1(c-a, b; c; 1/2), geometric convergence.
  double pfaff;
  if (!sum_series(c - a, b, c, 0.5, 20000, pfaff))
    throw NumericalFailure("2F1 at -1 did not converge", SignedLogReal::from_double(direct));
  return std::exp2(-b) * pfaff;
}

double log_pochhammer(double a, int n) {
  if (n < 0) throw InvalidInput("log_pochhammer requires n >= 0");
  if (n == 0) return 0.0;
  return log_gamma(a + n) - log_gamma(a);
}

double log_factorial(int n) {
  if (n < 0) throw InvalidInput("log_factorial requires n >= 0");
  return log_gamma(n + 1.0);
}

}  // namespace hopnorms
