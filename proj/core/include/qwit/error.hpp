#pragma once

#include <stdexcept>
#include <string>

namespace qwit {

/// Base class for every recoverable failure raised by the library.
/// Anything derived from Error is a domain problem (bad input, violated
/// precondition, failed convergence), never a programming bug.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition was violated by the caller.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// An input document (JSON spec, shot file, CSV) does not match its schema.
class SchemaError : public Error {
 public:
  using Error::Error;
};

/// An iterative method stopped without meeting its tolerance.
class ConvergenceError : public Error {
 public:
  ConvergenceError(const std::string& what, double residual)
      : Error(what), residual_(residual) {}
  double residual() const noexcept { return residual_; }

 private:
  double residual_;
};

}  // namespace qwit
