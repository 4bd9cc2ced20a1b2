#pragma once

#include <functional>
#include <vector>

#include "hopnorms/family.hpp"
#include "hopnorms/signed_log.hpp"

namespace hopnorms {

struct QuadratureConfig {
  double rel_tol = 1e-11;
  // Absolute floor, in units of the integrand's peak value.
  double abs_tol = 1e-300;
  int max_depth = 40;
  // Tails on infinite supports are cut where the log-integrand has fallen
  // this far below its running maximum.
  double tail_cutoff_log = -120.0;

  void validate() const;
};

using LogIntegrand = std::function<SignedLogReal(const SupportPoint&)>;

struct IntegrationProblem {
  LogIntegrand f;
  Support support;
  // Interior points where the integrand is not smooth (polynomial zeros).
  std::vector<double> breakpoints;
  // Leading power of the integrand at the finite ends; values in (-1, 0)
  // trigger the u = t^{1+s} substitution.
  double lower_exponent = 0.0;
  double upper_exponent = 0.0;
  // Starting point for the outward tail march when there are no breakpoints.
  double anchor = 0.0;
};

struct QuadratureResult {
  SignedLogReal value;
  SignedLogReal l1;  // integral of |f|
  double rel_error = 0.0;  // estimated error relative to l1
  long evaluations = 0;
};

QuadratureResult integrate(const IntegrationProblem& problem, const QuadratureConfig& cfg = {});

}  // namespace hopnorms
