#pragma once

#include <stdexcept>
#include <string>

namespace rttkit {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A color, site or basis index outside its valid range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// Operands live on different tensor-product spaces.
class ShapeError : public Error {
 public:
  using Error::Error;
};

/// A spectral point hits a pole (u = v in g(u,v), u = z_a in a Lax operator, ...).
class PoleError : public Error {
 public:
  using Error::Error;
};

/// An operator or linear system is not invertible at the sampled point.
/// Callers are expected to resample the spectral data and retry.
class SingularError : public Error {
 public:
  using Error::Error;
};

/// Bethe parameters (or partitions) violate the genericity assumptions.
class GenericityError : public Error {
 public:
  using Error::Error;
};

/// The request is outside what a construction supports (unsupported N,
/// asymptotics of a twisted chain, ...).
class DomainError : public Error {
 public:
  using Error::Error;
};

/// An overdetermined exact system has no solution: some upstream
/// computation is wrong. Never resampled.
class InconsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace rttkit
