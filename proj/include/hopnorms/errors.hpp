#pragma once

#include <stdexcept>
#include <string>

#include "hopnorms/signed_log.hpp"

namespace hopnorms {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Arguments outside the mathematical domain of the requested operation.
class InvalidInput : public Error {
 public:
  using Error::Error;
};

// Evaluation at a pole or log of an exact zero (weight at a singular endpoint).
class SingularEvaluation : public Error {
 public:
  using Error::Error;
};

class NumericalFailure : public Error {
 public:
  NumericalFailure(const std::string& what, SignedLogReal best = {}, double best_error = 0.0)
      : Error(what), best_(best), best_error_(best_error) {}

  const SignedLogReal& best_estimate() const noexcept { return best_; }
  double best_error_estimate() const noexcept { return best_error_; }

 private:
  SignedLogReal best_;
  double best_error_;
};

// The requested asymptotic regime has no leading term available.
class UnsupportedByTheory : public Error {
 public:
  using Error::Error;
};

}  // namespace hopnorms
