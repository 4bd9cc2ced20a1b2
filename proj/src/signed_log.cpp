#include "hopnorms/signed_log.hpp"

#include <cstdio>
#include <stdexcept>

namespace hopnorms {

SignedLogReal SignedLogReal::from_double(double v) {
  if (std::isnan(v)) throw std::domain_error("SignedLogReal: NaN");
  if (v == 0.0) return zero();
  return SignedLogReal(std::log(std::fabs(v)), v > 0 ? 1 : -1);
}

SignedLogReal SignedLogReal::from_log(double log_abs, int sign) {
  if (std::isnan(log_abs)) throw std::domain_error("SignedLogReal: NaN log magnitude");
  if (sign == 0 || log_abs == -std::numeric_limits<double>::infinity()) return zero();
  return SignedLogReal(log_abs, sign > 0 ? 1 : -1);
}

double SignedLogReal::to_double() const {
  if (sign_ == 0) return 0.0;
  return sign_ * std::exp(log_abs_);
}

SignedLogReal SignedLogReal::pow(double p) const {
  if (sign_ == 0) {
    if (p > 0) return zero();
    if (p == 0) return one();
    throw std::domain_error("SignedLogReal: negative power of zero");
  }
  if (sign_ < 0) {
    double r = std::fmod(p, 2.0);
    if (r == 0.0) return SignedLogReal(p * log_abs_, 1);
    if (std::fabs(r) == 1.0) return SignedLogReal(p * log_abs_, -1);
    throw std::domain_error("SignedLogReal: non-integer power of negative value");
  }
  return SignedLogReal(p * log_abs_, 1);
}

SignedLogReal& SignedLogReal::operator*=(const SignedLogReal& o) {
  if (sign_ == 0 || o.sign_ == 0) return *this = zero();
  log_abs_ += o.log_abs_;
  sign_ *= o.sign_;
  return *this;
}

SignedLogReal& SignedLogReal::operator/=(const SignedLogReal& o) {
  if (o.sign_ == 0) throw std::domain_error("SignedLogReal: division by zero");
  if (sign_ == 0) return *this;
  log_abs_ -= o.log_abs_;
  sign_ *= o.sign_;
  return *this;
}

SignedLogReal& SignedLogReal::operator+=(const SignedLogReal& o) {
  if (o.sign_ == 0) return *this;
  if (sign_ == 0) return *this = o;
  const bool self_larger = log_abs_ >= o.log_abs_;
  const double hi = self_larger ? log_abs_ : o.log_abs_;
  const double lo = self_larger ? o.log_abs_ : log_abs_;
  const int hi_sign = self_larger ? sign_ : o.sign_;
  const double d = std::exp(lo - hi);
  if (sign_ == o.sign_) {
    log_abs_ = hi + std::log1p(d);
    sign_ = hi_sign;
    return *this;
  }
  if (d == 1.0) return *this = zero();
  log_abs_ = hi + std::log1p(-d);
  sign_ = hi_sign;
  return *this;
}

std::string SignedLogReal::to_string() const {
  char buf[64];
  if (sign_ == 0) return "0";
  std::snprintf(buf, sizeof buf, "%sexp(%.17g)", sign_ < 0 ? "-" : "", log_abs_);
  return buf;
}

}  // namespace hopnorms
