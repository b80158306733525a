#pragma once

#include <stdexcept>
#include <string>

namespace mmq {

/// Thrown when a caller violates a documented precondition.
class ContractViolation : public std::invalid_argument {
 public:
  explicit ContractViolation(const std::string& what) : std::invalid_argument(what) {}
};

/// Thrown when structurally well-formed input turns out to be internally
/// inconsistent, e.g. pair rows that describe no valid characteristic matrix.
class MalformedInput : public std::runtime_error {
 public:
  explicit MalformedInput(const std::string& what) : std::runtime_error(what) {}
};

/// Thrown when a requested state vector would exceed the amplitude cap.
class DimensionCapExceeded : public std::runtime_error {
 public:
  explicit DimensionCapExceeded(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace mmq
