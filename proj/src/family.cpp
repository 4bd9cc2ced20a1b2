#include "hopnorms/family.hpp"

#include <cmath>
#include <cstdio>

#include "hopnorms/errors.hpp"

namespace hopnorms {

namespace {

void require_finite(double v, const char* what) {
  if (!std::isfinite(v)) throw InvalidInput(std::string(what) + " must be finite");
}

}  // namespace

PolynomialFamily PolynomialFamily::hermite() { return PolynomialFamily(Hermite{}); }

PolynomialFamily PolynomialFamily::laguerre(double alpha) {
  require_finite(alpha, "alpha");
  if (!(alpha > -1)) throw InvalidInput("Laguerre requires alpha > -1");
  return PolynomialFamily(Laguerre{alpha});
}

PolynomialFamily PolynomialFamily::jacobi(double alpha, double beta) {
  require_finite(alpha, "alpha");
  require_finite(beta, "beta");
  if (!(alpha > -1) || !(beta > -1)) throw InvalidInput("Jacobi requires alpha > -1 and beta > -1");
  return PolynomialFamily(Jacobi{alpha, beta});
}

PolynomialFamily PolynomialFamily::gegenbauer(double lambda) {
  require_finite(lambda, "lambda");
  if (!(lambda > -0.5) || lambda == 0.0)
    throw InvalidInput("Gegenbauer requires lambda > -1/2 and lambda != 0");
  return PolynomialFamily(Gegenbauer{lambda});
}

double PolynomialFamily::alpha() const {
  if (auto* l = std::get_if<Laguerre>(&params_)) return l->alpha;
  if (auto* j = std::get_if<Jacobi>(&params_)) return j->alpha;
  throw InvalidInput(name() + " has no alpha parameter");
}

double PolynomialFamily::beta() const {
  if (auto* j = std::get_if<Jacobi>(&params_)) return j->beta;
  throw InvalidInput(name() + " has no beta parameter");
}

double PolynomialFamily::lambda() const {
  if (auto* g = std::get_if<Gegenbauer>(&params_)) return g->lambda;
  throw InvalidInput(name() + " has no lambda parameter");
}

Support PolynomialFamily::support() const {
  constexpr double inf = std::numeric_limits<double>::infinity();
  switch (kind()) {
    case FamilyKind::hermite: return {-inf, inf};
    case FamilyKind::laguerre: return {0.0, inf};
    default: return {-1.0, 1.0};
  }
}

SupportPoint PolynomialFamily::point(double x) const {
  Support s = support();
  SupportPoint p{x};
  if (s.lower_finite()) p.from_lower = x - s.lower;
  if (s.upper_finite()) p.from_upper = s.upper - x;
  return p;
}

double PolynomialFamily::lower_exponent() const {
  switch (kind()) {
    case FamilyKind::laguerre: return std::get<Laguerre>(params_).alpha;
    case FamilyKind::jacobi: return std::get<Jacobi>(params_).beta;
    case FamilyKind::gegenbauer: return std::get<Gegenbauer>(params_).lambda - 0.5;
    default: return 0.0;
  }
}

double PolynomialFamily::upper_exponent() const {
  switch (kind()) {
    case FamilyKind::jacobi: return std::get<Jacobi>(params_).alpha;
    case FamilyKind::gegenbauer: return std::get<Gegenbauer>(params_).lambda - 0.5;
    default: return 0.0;
  }
}

std::string PolynomialFamily::name() const {
  switch (kind()) {
    case FamilyKind::hermite: return "hermite";
    case FamilyKind::laguerre: return "laguerre";
    case FamilyKind::jacobi: return "jacobi";
    default: return "gegenbauer";
  }
}

std::string PolynomialFamily::describe() const {
  char buf[96];
  switch (kind()) {
    case FamilyKind::hermite: return "hermite";
    case FamilyKind::laguerre: std::snprintf(buf, sizeof buf, "laguerre(alpha=%g)", alpha()); break;
    case FamilyKind::jacobi: std::snprintf(buf, sizeof buf, "jacobi(alpha=%g, beta=%g)", alpha(), beta()); break;
    default: std::snprintf(buf, sizeof buf, "gegenbauer(lambda=%g)", lambda()); break;
  }
  return buf;
}

}  // namespace hopnorms
