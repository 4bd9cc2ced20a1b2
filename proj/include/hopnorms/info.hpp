#pragma once

#include "hopnorms/family.hpp"
#include "hopnorms/quadrature.hpp"
#include "hopnorms/signed_log.hpp"

namespace hopnorms::info {

// rho_n = p_n^2 h, or its unit-mass version p_n^2 h / kappa_n when normalized.
struct DensityHandle {
  PolynomialFamily family;
  int n = 0;
  bool normalized = true;

  // Throws InvalidInput for n < 0, NumericalFailure if a normalized density
  // does not integrate to 1 within 1e-9.
  void check(const QuadratureConfig& cfg = {}) const;
};

enum class EMethod { quadrature, qderivative };

double renyi_entropy(const DensityHandle& d, double q, const QuadratureConfig& cfg = {});
double shannon_entropy(const DensityHandle& d, const QuadratureConfig& cfg = {});

// E[p_n] = -int p_n^2 h ln p_n^2 and I[p_n] = -int p_n^2 h ln h (orthogonal p_n).
// Kept in log-domain form: both reach (alpha/e)^alpha sizes for large parameters.
SignedLogReal functional_E(const PolynomialFamily& f, int n, EMethod method = EMethod::quadrature,
                           const QuadratureConfig& cfg = {});
SignedLogReal functional_I(const PolynomialFamily& f, int n, const QuadratureConfig& cfg = {});

// Rejected as divergent unless every finite-end weight exponent exceeds 1.
double fisher_information(const DensityHandle& d, const QuadratureConfig& cfg = {});
// True when fisher_information would reject the density for divergence.
bool fisher_diverges(const PolynomialFamily& f);

double variance(const DensityHandle& d, const QuadratureConfig& cfg = {});

double renyi_length(const DensityHandle& d, double q, const QuadratureConfig& cfg = {});
double shannon_length(const DensityHandle& d, const QuadratureConfig& cfg = {});

double lmc_renyi(const DensityHandle& d, double a, double b, const QuadratureConfig& cfg = {});
double lmc_plain(const DensityHandle& d, const QuadratureConfig& cfg = {});
double fisher_shannon(const DensityHandle& d, const QuadratureConfig& cfg = {});
double fisher_renyi(const DensityHandle& d, double q, const QuadratureConfig& cfg = {});

// S = -dW_q/dq at q = 1 with Richardson-extrapolated central differences.
// The step can be overridden to check extrapolation stability.
double shannon_from_Wq_derivative(const DensityHandle& d, const QuadratureConfig& cfg = {}, double step = 1e-3);

}  // namespace hopnorms::info
