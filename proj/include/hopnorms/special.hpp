#pragma once

namespace hopnorms {

double log_gamma(double x);
double digamma(double x);

// Gauss hypergeometric 2F1(a, b; c; -1). Requires c - a - b > 0 unless the
// series terminates (a or b a nonpositive integer).
double gauss_2f1_neg1(double a, double b, double c);

// ln of the rising factorial (a)_n for a > 0.
double log_pochhammer(double a, int n);
double log_factorial(int n);

}  // namespace hopnorms
