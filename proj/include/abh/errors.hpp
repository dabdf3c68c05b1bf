#pragma once

#include <stdexcept>
#include <string>

namespace abh {

/// Base class of every error raised by the library. The CLI maps all of
/// these to exit code 2.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Argument lies at a pole (Gamma at a non-positive integer).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// Argument outside the documented domain of an operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Series did not meet its stopping rule within the term cap.
class NoConvergence : public Error {
 public:
  using Error::Error;
};

/// A boundary Fourier coefficient is non-zero but its Gauss-summation
/// denominator vanishes, so the datum has no series representation.
class DegenerateCoefficient : public Error {
 public:
  using Error::Error;
};

class StepTooLarge : public Error {
 public:
  using Error::Error;
};

class PreconditionFailed : public Error {
 public:
  using Error::Error;
};

class DegenerateFit : public Error {
 public:
  using Error::Error;
};

/// Malformed CSV/JSON input.
class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace abh
