#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcx {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Level outside [1, kMaxLevel], or an operation that needs a larger level.
class LevelError : public Error {
 public:
  using Error::Error;
};

/// Binary operation on operands of different level or shape.
class MismatchError : public Error {
 public:
  using Error::Error;
};

/// Unit, mask, idempotent or ideal index out of range.
class IndexError : public Error {
 public:
  using Error::Error;
};

/// A value that should be finite is NaN or infinite.
class NonFiniteError : public Error {
 public:
  using Error::Error;
};

/// Raised when an operation needs an element outside the null cone. Carries the
/// 0-based idempotent components whose modulus vanished.
class NullConeError : public Error {
 public:
  NullConeError(const std::string& what, std::vector<std::size_t> components)
      : Error(what), components_(std::move(components)) {}

  const std::vector<std::size_t>& components() const noexcept { return components_; }

 private:
  std::vector<std::size_t> components_;
};

/// A matrix whose determinant lies in the null cone.
class SingularMatrixError : public NullConeError {
 public:
  using NullConeError::NullConeError;
};

/// Hermitian-only routine applied to a non-Hermitian slice or operator.
class NotSelfAdjointError : public Error {
 public:
  using Error::Error;
};

/// Multiperplex/multicomplex ideal flavors mixed, or a non-multiperplex value
/// where a multiperplex one is required.
class FlavorError : public Error {
 public:
  using Error::Error;
};

/// Names 0-based components by their 1-based basis element: {0, 2} -> "ε1, ε3".
std::string format_components(const std::vector<std::size_t>& components);

}  // namespace mcx
