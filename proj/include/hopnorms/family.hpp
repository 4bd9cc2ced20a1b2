#pragma once

#include <limits>
#include <string>
#include <variant>

namespace hopnorms {

struct Hermite {};
struct Laguerre {
  double alpha;
};
struct Jacobi {
  double alpha;
  double beta;
};
struct Gegenbauer {
  double lambda;
};

enum class FamilyKind { hermite, laguerre, jacobi, gegenbauer };

struct Support {
  double lower;
  double upper;
  bool lower_finite() const { return lower > -std::numeric_limits<double>::infinity(); }
  bool upper_finite() const { return upper < std::numeric_limits<double>::infinity(); }
};

// A point of the support together with its distances to both endpoints.
// Near a finite endpoint x itself cannot resolve 1 - x or 1 + x; callers that
// parametrize by the distance keep it exact here.
struct SupportPoint {
  double x;
  double from_lower = std::numeric_limits<double>::infinity();
  double from_upper = std::numeric_limits<double>::infinity();
};

class PolynomialFamily {
 public:
  using Params = std::variant<Hermite, Laguerre, Jacobi, Gegenbauer>;

  static PolynomialFamily hermite();
  static PolynomialFamily laguerre(double alpha);
  static PolynomialFamily jacobi(double alpha, double beta);
  static PolynomialFamily gegenbauer(double lambda);

  const Params& params() const { return params_; }
  FamilyKind kind() const { return static_cast<FamilyKind>(params_.index()); }

  // Parameter accessors throw InvalidInput when the family has no such parameter.
  double alpha() const;
  double beta() const;
  double lambda() const;

  Support support() const;
  SupportPoint point(double x) const;

  // Power of the weight at the finite endpoints (0 for infinite ones):
  // h ~ (x - lower)^lower_exponent and h ~ (upper - x)^upper_exponent.
  double lower_exponent() const;
  double upper_exponent() const;

  std::string name() const;
  std::string describe() const;

 private:
  explicit PolynomialFamily(Params p) : params_(p) {}
  Params params_;
};

}  // namespace hopnorms
