#pragma once

#include <stdexcept>
#include <string>

namespace renyi {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation (p <= 0, a = 0, u not in (0,1), ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// Conjugate exponents of mixed sign, or a combination that yields a negative order.
class IncompatibleExponentsError : public Error {
 public:
  using Error::Error;
};

/// The combined conjugate equals 1, i.e. the resulting order is infinite.
class UnsupportedInfiniteOrderError : public Error {
 public:
  using Error::Error;
};

/// Per-variable orders whose reciprocal conjugates do not add up to the target's.
class InconsistentOrdersError : public Error {
 public:
  using Error::Error;
};

/// An integral does not settle when its truncation window is widened.
class NonIntegrableError : public Error {
 public:
  using Error::Error;
};

/// A sum density lost too much mass to grid truncation.
class GridCoverageError : public Error {
 public:
  using Error::Error;
};

/// A transport target has interior gaps, so no increasing diffeomorphism reaches it.
class NonDiffeomorphicTargetError : public Error {
 public:
  using Error::Error;
};

/// A documented precondition (log-concavity, ordering of exponents, ...) does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace renyi
