#pragma once

#include <stdexcept>
#include <string>

namespace lplde {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A ModelSpec (or a derived configuration) violates its invariants.
class InvalidModel : public Error {
 public:
  using Error::Error;
};

/// A sweep or CLI configuration is unusable.
class InvalidConfig : public Error {
 public:
  using Error::Error;
};

/// An order index or state precondition of the recursion was violated.
class OrderOutOfRange : public Error {
 public:
  using Error::Error;
};

/// The secular component survived cancellation; signals a bug upstream.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

/// The stationary point of the frequency in lambda is not real (mu < 0).
class PmsUndefined : public Error {
 public:
  using Error::Error;
};

/// omega^2 + mu A^2 <= 0: the motion does not oscillate.
class UnboundedMotion : public Error {
 public:
  using Error::Error;
};

/// Elliptic route called with a modulus outside [0, 1).
class UnsupportedModulus : public Error {
 public:
  using Error::Error;
};

/// ODE route failed to detect the half-period crossing.
class IntegrationFailure : public Error {
 public:
  using Error::Error;
};

}  // namespace lplde
