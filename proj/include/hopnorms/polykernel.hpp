#pragma once

#include <vector>

#include "hopnorms/family.hpp"
#include "hopnorms/signed_log.hpp"

namespace hopnorms {

// Power-basis coefficients, p_n(x) = sum_k c[k] x^k.
struct CoefficientList {
  int degree = 0;
  std::vector<double> c;

  double horner(double x) const;
};

constexpr int kMaxCoefficientDegree = 60;

double eval(const PolynomialFamily& f, int n, double x);
SignedLogReal eval_log(const PolynomialFamily& f, int n, double x);

double eval_derivative(const PolynomialFamily& f, int n, double x);
SignedLogReal eval_derivative_log(const PolynomialFamily& f, int n, double x);

SignedLogReal norm_constant_log(const PolynomialFamily& f, int n);
CoefficientList coefficients(const PolynomialFamily& f, int n);

SignedLogReal weight_log(const PolynomialFamily& f, double x);
SignedLogReal weight_log(const PolynomialFamily& f, const SupportPoint& p);
double weight_log_derivative(const PolynomialFamily& f, double x);
double weight_log_derivative(const PolynomialFamily& f, const SupportPoint& p);

// Ratio C_n^{(lambda)} / P_n^{(lambda-1/2, lambda-1/2)}, as a log (the ratio
// is negative for lambda < 0 and odd-sized sign changes are tracked by sign).
SignedLogReal gegenbauer_jacobi_ratio_log(double lambda, int n);

// |p_n| at the finite endpoints of Jacobi: (alpha+1)_n/n! at +1, (beta+1)_n/n! at -1.
double log_jacobi_at_plus_one(double alpha, int n);

}  // namespace hopnorms
