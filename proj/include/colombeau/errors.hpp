#pragma once

#include <stdexcept>
#include <string>

namespace colombeau {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// A documented precondition of an operation does not hold.
struct PreconditionError : Error {
  using Error::Error;
};

/// Fewer usable samples than an estimator needs.
struct InsufficientDataError : Error {
  using Error::Error;
};

/// All magnitudes in the requested window are exactly zero; order
/// estimation is meaningless (the net sits below every order).
struct IdenticallyZeroError : Error {
  using Error::Error;
};

/// A point or support ball left the domain where the operation requires
/// containment.
struct DomainError : Error {
  using Error::Error;
};

/// A factory could not produce the requested object (e.g. singular
/// moment system).
struct ConstructionError : Error {
  using Error::Error;
};

struct ParseError : Error {
  using Error::Error;
};

}  // namespace colombeau
