#pragma once

#include <array>
#include <string>

#include "hopnorms/signed_log.hpp"

namespace hopnorms::param {

// Which version of an asymptotic formula to evaluate.
//   limit               leading term of the limiting-polynomial reduction
//                       (Hermite for Laguerre/Gegenbauer, Laguerre for Jacobi),
//                       scaled so that it is exact at n = 0
//   printed             the closed display as published
//   printed_simplified  the further-simplified display, where one exists
enum class Form { limit, printed, printed_simplified };

std::string form_name(Form f);
Form parse_form(const std::string& s);

// Growth model in the large parameter P:
//   V ~ P^power * e^{exp_rate P} * (P/e)^{self_rate P} * (ln P)^{log_power}
struct ExponentRecord {
  double power = 0.0;
  double exp_rate = 0.0;
  double self_rate = 0.0;
  double log_power = 0.0;

  // d ln V / d ln P of the model, at P.
  double log_slope(double P) const;
};

struct AsymptoticValue {
  SignedLogReal value;
  ExponentRecord exponents;
  std::string validity;
  Form form = Form::limit;
};

// For Jacobi: which of the two parameters is sent to infinity.
enum class Large { alpha, beta };

struct TemmeExpansion {
  int m = 0;
  double mu = 1.0;
  double lambda_scale = 1.0;
  double q = 2.0;
  std::array<double, 3> D{};       // D_0, D_1, D_2
  std::array<double, 3> Dprime{};  // dD_k/dq
};

TemmeExpansion temme_expansion(int m, double mu, double lambda_scale, double q);

// int_0^inf x^{mu-1} e^{-lambda x} |L_m^{(alpha)}(x)|^q dx through order 0, 1 or 2 in 1/alpha.
AsymptoticValue temme_I1(int m, double alpha, double mu, double lambda_scale, double q, int order = 2);
// int_0^inf x^{mu-1} e^{-lambda x} L_m^2 ln L_m^2 dx = 2 dI1/dq at q = 2.
AsymptoticValue temme_I2(int m, double alpha, double mu, double lambda_scale, int order = 2);

// The constant of the Laguerre unweighted asymptotics, N_q[H_m] / ((m!)^q 2^{e}),
// e = mq/2 - 1/2 (limit) or mq - 1/2 (printed).
SignedLogReal laguerre_constant(int m, double q, Form form = Form::limit);

// int_0^inf x^{alpha+delta} e^{-x} |L_m^{(alpha)}|^q dx, alpha -> inf.
AsymptoticValue laguerre_unweighted_param(int m, double alpha, double q, double delta = 0.0,
                                          Form form = Form::limit);
// +int_0^inf x^{alpha+delta} e^{-x} L_m^2 ln L_m^2 dx, alpha -> inf, m >= 1.
AsymptoticValue laguerre_shannon_param(int m, double alpha, double delta = 0.0, Form form = Form::limit);
AsymptoticValue laguerre_weighted_param(int n, double alpha, double q, bool normalized, Form form = Form::limit);

AsymptoticValue jacobi_unweighted_param(int n, double alpha, double beta, double q, Large large = Large::alpha,
                                        Form form = Form::limit);
// E = -int h P^2 ln P^2, n >= 1.
AsymptoticValue jacobi_shannon_param(int n, double alpha, double beta, Large large = Large::alpha,
                                     Form form = Form::limit);
AsymptoticValue jacobi_weighted_param(int n, double alpha, double beta, double q, bool normalized,
                                      Large large = Large::alpha, Form form = Form::limit);

AsymptoticValue gegenbauer_unweighted_param(int n, double lambda, double q, bool normalized,
                                            Form form = Form::limit);
// +int h C^2 ln C^2 (orthogonal) or +int h Chat^2 ln Chat^2 (normalized), n >= 1.
AsymptoticValue gegenbauer_shannon_param(int n, double lambda, bool normalized, Form form = Form::limit);
AsymptoticValue gegenbauer_weighted_param(int n, double lambda, double q, bool normalized,
                                          Form form = Form::limit);

}  // namespace hopnorms::param
