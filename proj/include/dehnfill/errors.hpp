#pragma once

#include <stdexcept>
#include <string>

namespace dehn {

/// Base of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An argument lies outside the domain of the operation.
class DomainError : public Error {
 public:
  using Error::Error;
};

/// A homology basis is negatively oriented where a positive one is required.
class OrientationError : public Error {
 public:
  using Error::Error;
};

/// A basis or linear map is (numerically) singular.
class DegenerateError : public Error {
 public:
  using Error::Error;
};

/// The Dehn surgery coefficient of a complete (horospherical) cusp is infinite.
class InfiniteCoefficientError : public Error {
 public:
  using Error::Error;
};

/// The normalized length is too small for the envelope bounds to apply.
class UncertifiableError : public Error {
 public:
  using Error::Error;
};

/// An iterative numerical routine did not reach its tolerance.
class NumericalError : public Error {
 public:
  using Error::Error;
};

}  // namespace dehn
