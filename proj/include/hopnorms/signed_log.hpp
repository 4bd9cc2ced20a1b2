#pragma once

#include <cmath>
#include <limits>
#include <string>

namespace hopnorms {

// A real number stored as sign and natural log of its magnitude.
class SignedLogReal {
 public:
  constexpr SignedLogReal() = default;

  static SignedLogReal from_double(double v);
  static SignedLogReal from_log(double log_abs, int sign = 1);
  static constexpr SignedLogReal zero() { return SignedLogReal(); }
  static constexpr SignedLogReal one() { return SignedLogReal(0.0, 1); }

  int sign() const noexcept { return sign_; }
  // Meaningless when sign() == 0.
  double log_abs() const noexcept { return log_abs_; }
  bool is_zero() const noexcept { return sign_ == 0; }

  // Overflows to +-inf and underflows to 0 outside the double range.
  double to_double() const;

  SignedLogReal abs() const { return is_zero() ? zero() : SignedLogReal(log_abs_, 1); }
  SignedLogReal pow(double p) const;
  SignedLogReal operator-() const { return SignedLogReal(log_abs_, -sign_); }

  SignedLogReal& operator*=(const SignedLogReal& o);
  SignedLogReal& operator/=(const SignedLogReal& o);
  SignedLogReal& operator+=(const SignedLogReal& o);
  SignedLogReal& operator-=(const SignedLogReal& o) { return *this += -o; }

  friend SignedLogReal operator*(SignedLogReal a, const SignedLogReal& b) { return a *= b; }
  friend SignedLogReal operator/(SignedLogReal a, const SignedLogReal& b) { return a /= b; }
  friend SignedLogReal operator+(SignedLogReal a, const SignedLogReal& b) { return a += b; }
  friend SignedLogReal operator-(SignedLogReal a, const SignedLogReal& b) { return a -= b; }

  std::string to_string() const;

 private:
  constexpr SignedLogReal(double log_abs, int sign) : sign_(sign), log_abs_(log_abs) {}

  int sign_ = 0;
  double log_abs_ = -std::numeric_limits<double>::infinity();
};

}  // namespace hopnorms
