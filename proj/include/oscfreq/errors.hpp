#pragma once

#include <stdexcept>
#include <string>

namespace oscfreq {

// Root of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& what, double best_estimate, double error_estimate)
      : Error(what), best_estimate_(best_estimate), error_estimate_(error_estimate) {}

  double best_estimate() const noexcept { return best_estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double best_estimate_;
  double error_estimate_;
};

class BracketError : public Error {
 public:
  using Error::Error;
};

// omega1 == omega2 makes the frequency formula 0/0.
class DegenerateTrialsError : public Error {
 public:
  using Error::Error;
};

// The Galerkin mismatch vanishes for every k (linear restoring force), so k
// is arbitrary and omega does not depend on it.
class DegenerateGalerkinError : public Error {
 public:
  using Error::Error;
};

// No Galerkin root in (0,1) even though the mismatch is not identically zero.
class GalerkinRootError : public Error {
 public:
  using Error::Error;
};

// omega^2 <= 0 or the potential does not confine the motion at this amplitude.
class NonOscillatoryError : public Error {
 public:
  using Error::Error;
};

// The ODE oracle did not see the expected event before t_max.
class NoOscillationError : public Error {
 public:
  using Error::Error;
};

class SpecParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace oscfreq
