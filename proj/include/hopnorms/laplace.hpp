#pragma once

#include <vector>

#include "hopnorms/exact.hpp"
#include "hopnorms/family.hpp"

namespace hopnorms::laplace {

// Global maximum of f = ln h + ln p_n^2 over the interior of the support.
struct LaplacePoint {
  double x0 = 0.0;  // largest global maximizer
  double f_at_x0 = 0.0;
  double f2_at_x0 = 0.0;
  int multiplicity = 1;
  std::vector<double> maximizers;  // ascending
};

LaplacePoint locate_density_maximum(const PolynomialFamily& f, int n);

// |p'/p + h'/(2h)| at x; vanishes at every critical point of f.
double stationarity_residual(const PolynomialFamily& f, int n, double x);

// Closed-form second derivative of f at a critical point x.
double second_derivative_at_critical(const PolynomialFamily& f, int n, double x);

// Leading Laplace term of W_q as q -> infinity.
NormResult weighted_norm_q_asym(const PolynomialFamily& f, int n, double q);

// Leading endpoint (Watson lemma) term of the unweighted Jacobi norm.
NormResult unweighted_norm_q_asym_jacobi(int n, double alpha, double beta, double q);

// Dispatch by family: Jacobi directly, Gegenbauer through the Jacobi bridge,
// Hermite and Laguerre are rejected with UnsupportedByTheory.
NormResult unweighted_norm_q_asym(const PolynomialFamily& f, int n, double q);

}  // namespace hopnorms::laplace
