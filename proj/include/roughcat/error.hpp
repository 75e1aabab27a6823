#pragma once

#include <stdexcept>
#include <string>

namespace roughcat {

enum class ErrorKind {
  unknown_object,
  algebra_mismatch,
  shape_mismatch,
  invalid_grade,
  invalid_structure,
  parse_error,
  verification_failed,
};

/// Single exception type for the library; `kind()` distinguishes input
/// problems from structural violations.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace roughcat
