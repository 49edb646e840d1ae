#pragma once

#include <stdexcept>
#include <string>

namespace spnum {

// Thrown when a request would exceed the configured memory budget
// (e.g. power tables for an oversized digit-count cap).
class ResourceError : public std::runtime_error {
 public:
  explicit ResourceError(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an iteration fails to meet its certificate within the cap.
// This signals a bug in the evaluator, not a user-input condition.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace spnum
