#pragma once

#include <stdexcept>
#include <string>

namespace ga {

enum class ErrorKind {
  context_mismatch,
  out_of_range,
  invalid_argument,
  shape_mismatch,
  limit_exceeded,
  singular,
  asymmetric,
  degenerate,
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Raised when an operator that must be invertible is not. Carries the
/// determinant magnitude that failed the singularity test.
class SingularError : public Error {
 public:
  SingularError(const std::string& what, double magnitude)
      : Error(ErrorKind::singular, what), magnitude_(magnitude) {}

  double magnitude() const noexcept { return magnitude_; }

 private:
  double magnitude_;
};

}  // namespace ga
