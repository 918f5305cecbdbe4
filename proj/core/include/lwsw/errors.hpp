#pragma once

#include <stdexcept>
#include <string>

namespace lwsw {

inline constexpr const char* kToolVersion = "1.0.0";

// Parameter/input rejection; the message names the violated assumption.
class ValidationError : public std::runtime_error {
 public:
  explicit ValidationError(const std::string& what) : std::runtime_error(what) {}
};

// Explicit-substep stability rejection; carries a usable step size.
class CflError : public ValidationError {
 public:
  CflError(const std::string& what, double suggested)
      : ValidationError(what), suggested_dt(suggested) {}
  double suggested_dt;
};

// Thrown by operations that need a converged solve and did not get one.
class ConvergenceError : public std::runtime_error {
 public:
  explicit ConvergenceError(const std::string& what) : std::runtime_error(what) {}
};

class IoError : public std::runtime_error {
 public:
  explicit IoError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace lwsw
