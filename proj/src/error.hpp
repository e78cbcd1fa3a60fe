#pragma once

#include <stdexcept>
#include <string>

namespace dart2 {

/// Invalid input from the caller (bad p-value, malformed tree, ...).
/// Maps to exit/status code 2 at the C API and CLI boundary.
class DomainError : public std::invalid_argument {
 public:
  explicit DomainError(const std::string& what) : std::invalid_argument(what) {}
};

/// Broken internal invariant. Maps to status code 3.
class InternalError : public std::logic_error {
 public:
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace dart2
