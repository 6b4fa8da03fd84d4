#ifndef MULTIPORT_ERRORS_HPP
#define MULTIPORT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace multiport {

/// Base class for all errors raised by this library.
class Error : public std::runtime_error {
 public:
  explicit Error(const std::string& what) : std::runtime_error(what) {}
};

/// Rejected input: bad shape, failed precondition, schema violation.
class ValidationError : public Error {
 public:
  explicit ValidationError(const std::string& what) : Error(what) {}
};

/// Request exceeds a resource guard (matrix side, basis size, memory).
class CapacityError : public Error {
 public:
  explicit CapacityError(const std::string& what) : Error(what) {}
};

/// Arithmetic result does not fit the target type.
class OverflowError : public CapacityError {
 public:
  explicit OverflowError(const std::string& what) : CapacityError(what) {}
};

}  // namespace multiport

#endif
