#pragma once

#include <span>
#include <string>
#include <vector>

#include "hopnorms/family.hpp"
#include "hopnorms/quadrature.hpp"
#include "hopnorms/signed_log.hpp"

namespace hopnorms {

enum class Method { quadrature, bell, asymptotic_q, asymptotic_parameter };

std::string method_name(Method m);

struct NormResult {
  SignedLogReal value;
  Method method = Method::quadrature;
  double error_estimate = 0.0;  // relative
};

namespace exact {

// All n real zeros of p_n, ascending.
std::vector<double> polynomial_zeros(const PolynomialFamily& f, int n);

// Integration problem over the support of f split at the zeros of p_n.
IntegrationProblem problem_for(const PolynomialFamily& f, int n, LogIntegrand g, double lower_exponent,
                               double upper_exponent);

// Integral of |p_n|^q h.
NormResult unweighted_norm_quad(const PolynomialFamily& f, int n, double q, const QuadratureConfig& cfg = {});
// Integral of (p_n^2 h)^q, divided by kappa_n^q when normalized.
NormResult weighted_norm_quad(const PolynomialFamily& f, int n, double q, const QuadratureConfig& cfg = {},
                              bool normalized = false);

double weight_moment(const PolynomialFamily& f, int t);
SignedLogReal weight_moment_log(const PolynomialFamily& f, int t);

// B_{m,l}(args[0], ..., args[m-l]) by partition enumeration.
double bell_polynomial(int m, int l, std::span<const double> args);

// Exact unweighted norm for even integer q from the power coefficients and moments.
NormResult unweighted_norm_bell(const PolynomialFamily& f, int n, int q);

}  // namespace exact
}  // namespace hopnorms
