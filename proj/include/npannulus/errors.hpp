#ifndef NPANNULUS_ERRORS_HPP
#define NPANNULUS_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace npannulus {

/// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
  virtual const char* kind() const noexcept { return "error"; }
};

/// A point outside the domain of a function (e.g. evaluating the map at w = 0).
class DomainError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "domain"; }
};

/// A malformed or out-of-range argument.
class ArgumentError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "argument"; }
};

/// The map degenerates on a sampled curve (vanishing speed or Jacobian).
class GeometryError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "geometry"; }
};

/// Scaled Grunsky coefficients do not decay (fitted rate >= 1).
class DecayError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "decay"; }
};

/// LAPACK failed to converge or rejected its input.
class SolverError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "solver"; }
};

/// Eigenvalues carry imaginary parts above the accepted tolerance.
class RealizationError : public Error {
 public:
  using Error::Error;
  const char* kind() const noexcept override { return "realization"; }
};

}  // namespace npannulus

#endif  // NPANNULUS_ERRORS_HPP
