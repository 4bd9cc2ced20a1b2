#include <cmath>
#include <numbers>

#include "doctest.h"
#include "hopnorms/errors.hpp"
#include "hopnorms/exact.hpp"
#include "hopnorms/polykernel.hpp"
#include "hopnorms/special.hpp"

using namespace hopnorms;

namespace {

const double kSqrtPi = std::sqrt(std::numbers::pi);

double rel_err(const SignedLogReal& a, double b) { return std::fabs(a.to_double() / b - 1.0); }
double log_rel_err(const SignedLogReal& a, const SignedLogReal& b) { return std::fabs(std::expm1(a.log_abs() - b.log_abs())); }

std::vector<PolynomialFamily> grid_families() {
  using F = PolynomialFamily;
  return {F::hermite(),     F::laguerre(0.5), F::laguerre(1),      F::laguerre(2.5),   F::jacobi(0.5, 0.5),
          F::jacobi(1, 2.5), F::jacobi(2.5, 1), F::gegenbauer(0.5), F::gegenbauer(1), F::gegenbauer(2.5)};
}

}  // namespace

TEST_CASE("zeros are found for every family and are simple") {
  for (const auto& f : grid_families()) {
    for (int n : {1, 2, 5, 15, 40}) {
      auto z = exact::polynomial_zeros(f, n);
      REQUIRE(int(z.size()) == n);
      for (size_t i = 1; i < z.size(); ++i) CHECK(z[i] > z[i - 1]);
    }
  }
  auto z = exact::polynomial_zeros(PolynomialFamily::hermite(), 2);
  CHECK(z[1] == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  auto zl = exact::polynomial_zeros(PolynomialFamily::laguerre(4000), 3);
  CHECK(zl.size() == 3);
  auto zj = exact::polynomial_zeros(PolynomialFamily::jacobi(4000, 0), 2);
  CHECK(zj.size() == 2);
}

TEST_CASE("unweighted norm examples") {
  auto h = PolynomialFamily::hermite();
  auto r0 = exact::unweighted_norm_quad(h, 0, 7.3);
  CHECK(r0.method == Method::quadrature);
  CHECK(rel_err(r0.value, kSqrtPi) < 1e-12);
  CHECK(rel_err(exact::unweighted_norm_quad(h, 1, 4).value, 12 * kSqrtPi) < 1e-11);
  CHECK_THROWS_AS(exact::unweighted_norm_quad(h, 1, 0.0), InvalidInput);
  CHECK_THROWS_AS(exact::unweighted_norm_quad(h, 1, -2), InvalidInput);
}

TEST_CASE("unweighted and weighted norms against mpmath quadrature references") {
  using F = PolynomialFamily;
  // tests/oracles/kernel_oracle.py
  CHECK(rel_err(exact::unweighted_norm_quad(F::laguerre(0.5), 3, 2.7).value, 27.579158233590050944) < 1e-10);
  CHECK(rel_err(exact::unweighted_norm_quad(F::hermite(), 3, 0.5).value, 3.3629771624275166736) < 1e-10);
  CHECK(rel_err(exact::unweighted_norm_quad(F::jacobi(-0.5, 0.7), 2, 1.3).value, 0.80253148917253134205) < 1e-10);
  CHECK(rel_err(exact::weighted_norm_quad(F::hermite(), 2, 3).value, 213.45837107980085804) < 1e-10);
  CHECK(rel_err(exact::weighted_norm_quad(F::laguerre(1.5), 2, 0.6).value, 8.279416935287604741) < 1e-10);
  CHECK(rel_err(exact::weighted_norm_quad(F::gegenbauer(2), 2, 1.5).value, 12.324505792944980488) < 1e-10);
  // q * alpha = -0.6 exercises the endpoint substitution
  CHECK(rel_err(exact::weighted_norm_quad(F::jacobi(-0.3, 0.2), 1, 2).value, 0.51558414253187968142) < 1e-10);
  // magnitude far beyond double range: Gamma(1001)/2^1001
  auto big = exact::weighted_norm_quad(F::laguerre(500), 0, 2).value;
  CHECK(std::fabs(big.log_abs() - 5218.28785074765809415148153315) < 1e-10 * 5218);
}

TEST_CASE("weighted norm examples") {
  auto h = PolynomialFamily::hermite();
  CHECK(rel_err(exact::weighted_norm_quad(h, 0, 2).value, std::sqrt(std::numbers::pi / 2)) < 1e-12);
  for (double lam : {0.75, 2.0, 6.0}) {
    auto g = PolynomialFamily::gegenbauer(lam);
    double expect = 4 * lam * lam * std::exp(log_gamma(1.5) + log_gamma(lam + 0.5) - log_gamma(lam + 2));
    CHECK(rel_err(exact::weighted_norm_quad(g, 1, 1).value, expect) < 1e-11);
  }
  CHECK_THROWS_AS(exact::weighted_norm_quad(PolynomialFamily::jacobi(-0.6, 1), 1, 2), InvalidInput);
  CHECK_THROWS_AS(exact::weighted_norm_quad(PolynomialFamily::laguerre(-0.5), 1, 3), InvalidInput);
}

TEST_CASE("orthonormality of the Rakhmanov density and N_2 = kappa") {
  for (const auto& f : grid_families()) {
    for (int n = 0; n <= 15; ++n) {
      auto w = exact::weighted_norm_quad(f, n, 1, {}, true);
      CHECK(std::fabs(w.value.to_double() - 1.0) < 1e-9);
      auto n2 = exact::unweighted_norm_quad(f, n, 2);
      CHECK(log_rel_err(n2.value, norm_constant_log(f, n)) < 1e-9);
    }
  }
}

TEST_CASE("orthogonality by quadrature") {
  for (const auto& f : grid_families()) {
    for (int n = 1; n <= 12; ++n) {
      double kappa = norm_constant_log(f, n).to_double();
      for (int m = 0; m < n; m += 3) {
        auto g = [&f, n, m](const SupportPoint& pt) {
          return eval_log(f, n, pt.x) * eval_log(f, m, pt.x) * weight_log(f, pt);
        };
        auto r = integrate(exact::problem_for(f, n, g, f.lower_exponent(), f.upper_exponent()));
        CHECK(std::fabs(r.value.to_double()) <= 1e-9 * kappa);
      }
    }
  }
}

TEST_CASE("weight moments") {
  using F = PolynomialFamily;
  CHECK(exact::weight_moment(F::hermite(), 0) == doctest::Approx(kSqrtPi).epsilon(1e-15));
  CHECK(exact::weight_moment(F::hermite(), 3) == 0.0);
  CHECK(exact::weight_moment(F::hermite(), 4) == doctest::Approx(0.75 * kSqrtPi).epsilon(1e-15));
  CHECK(exact::weight_moment(F::laguerre(0), 3) == doctest::Approx(6.0).epsilon(1e-15));
  CHECK(exact::weight_moment(F::jacobi(0, 0), 0) == doctest::Approx(2.0).epsilon(1e-15));
  // mpmath quadrature references
  CHECK(exact::weight_moment(F::jacobi(2.5, 1.5), 3) == doctest::Approx(-0.073631077818510779026).epsilon(1e-12));
  CHECK(exact::weight_moment(F::jacobi(0.5, 0.5), 4) == doctest::Approx(0.1963495408493620774).epsilon(1e-12));
  CHECK(exact::weight_moment(F::gegenbauer(1), 4) == doctest::Approx(0.1963495408493620774).epsilon(1e-12));
  CHECK(exact::weight_moment(F::jacobi(-0.5, 0.25), 7) == doctest::Approx(0.70273850333241218472).epsilon(1e-12));
  CHECK(exact::weight_moment(F::jacobi(2.5, 1.5), 20) == doctest::Approx(0.0031451100235995153924).epsilon(1e-11));
  CHECK(exact::weight_moment(F::gegenbauer(2.5), 5) == 0.0);
}

TEST_CASE("Bell polynomial examples") {
  std::vector<double> c{1.5, -2.0, 0.7, 3.0};
  CHECK(exact::bell_polynomial(4, 1, c) == doctest::Approx(3.0));
  std::vector<double> c1{1.7};
  CHECK(exact::bell_polynomial(2, 2, c1) == doctest::Approx(1.7 * 1.7));
  std::vector<double> c2{1.5, -2.0};
  CHECK(exact::bell_polynomial(3, 2, c2) == doctest::Approx(3 * 1.5 * -2.0));
  // B_{6,3}: 15 x1^2 x4 + 60 x1 x2 x3 + 15 x2^3 (exhaustive enumeration by hand)
  std::vector<double> c3{1.1, 0.9, -1.3, 2.0};
  double expect = 15 * 1.1 * 1.1 * 2.0 + 60 * 1.1 * 0.9 * -1.3 + 15 * 0.9 * 0.9 * 0.9;
  CHECK(exact::bell_polynomial(6, 3, c3) == doctest::Approx(expect).epsilon(1e-14));
  // B_{m,l}(1,1,...) are Stirling numbers of the second kind: S(7,3) = 301
  std::vector<double> ones(5, 1.0);
  CHECK(exact::bell_polynomial(7, 3, ones) == doctest::Approx(301.0).epsilon(1e-15));
  CHECK_THROWS_AS(exact::bell_polynomial(3, 2, c3), InvalidInput);
  CHECK_THROWS_AS(exact::bell_polynomial(3, 0, c1), InvalidInput);
}

TEST_CASE("Bell engine examples") {
  auto h = PolynomialFamily::hermite();
  auto r = exact::unweighted_norm_bell(h, 1, 2);
  CHECK(r.method == Method::bell);
  CHECK(rel_err(r.value, 2 * kSqrtPi) < 1e-14);
  CHECK(rel_err(exact::unweighted_norm_bell(h, 1, 4).value, 12 * kSqrtPi) < 1e-14);
  CHECK(rel_err(exact::unweighted_norm_bell(PolynomialFamily::laguerre(0), 1, 2).value, 1.0) < 1e-14);
  CHECK_THROWS_AS(exact::unweighted_norm_bell(h, 1, 3), InvalidInput);
  CHECK_THROWS_AS(exact::unweighted_norm_bell(h, 1, 0), InvalidInput);
  CHECK_THROWS_AS(exact::unweighted_norm_bell(h, 61, 4), InvalidInput);
}

TEST_CASE("Bell and quadrature engines agree") {
  for (const auto& f : grid_families()) {
    for (int q : {2, 4}) {
      for (int n = 0; n <= 6; ++n) {
        auto b = exact::unweighted_norm_bell(f, n, q);
        auto g = exact::unweighted_norm_quad(f, n, q);
        CHECK(log_rel_err(b.value, g.value) < 1e-8);
      }
    }
  }
}

TEST_CASE("halving rel_tol never increases the reported error estimate") {
  struct Case {
    PolynomialFamily f;
    int n;
    double q;
    bool weighted;
  };
  std::vector<Case> cases{{PolynomialFamily::hermite(), 3, 2.5, false},
                          {PolynomialFamily::laguerre(1.5), 4, 0.7, true},
                          {PolynomialFamily::jacobi(-0.4, 1.0), 3, 1.5, false},
                          {PolynomialFamily::gegenbauer(2.0), 5, 3.0, true}};
  for (const auto& c : cases) {
    double prev = INFINITY;
    for (double tol = 1e-6; tol >= 1e-12; tol /= 2) {
      QuadratureConfig cfg;
      cfg.rel_tol = tol;
      auto r = c.weighted ? exact::weighted_norm_quad(c.f, c.n, c.q, cfg) : exact::unweighted_norm_quad(c.f, c.n, c.q, cfg);
      CHECK(r.error_estimate <= prev);
      CHECK(r.error_estimate <= tol);
      prev = r.error_estimate;
    }
  }
}

TEST_CASE("quadrature failure carries the best estimate") {
  QuadratureConfig cfg;
  cfg.rel_tol = 1e-30;
  cfg.max_depth = 2;
  try {
    exact::unweighted_norm_quad(PolynomialFamily::hermite(), 3, 0.3, cfg);
    CHECK(false);
  } catch (const NumericalFailure& e) {
    CHECK(e.best_estimate().sign() == 1);
    CHECK(e.best_error_estimate() > 0);
  }
  QuadratureConfig bad;
  bad.rel_tol = 0;
  CHECK_THROWS_AS(exact::unweighted_norm_quad(PolynomialFamily::hermite(), 1, 2, bad), InvalidInput);
}

TEST_CASE("Gegenbauer bridge for unweighted norms") {
  for (double lam : {0.75, 1.0, 3.5, 12.0}) {
    auto g = PolynomialFamily::gegenbauer(lam);
    auto j = PolynomialFamily::jacobi(lam - 0.5, lam - 0.5);
    for (int n : {1, 2, 5, 9}) {
      for (double q : {1.0, 2.5, 4.0}) {
        auto lg = exact::unweighted_norm_quad(g, n, q).value;
        auto lj = exact::unweighted_norm_quad(j, n, q).value * gegenbauer_jacobi_ratio_log(lam, n).abs().pow(q);
        CHECK(log_rel_err(lg, lj) < 1e-9);
      }
    }
  }
}
