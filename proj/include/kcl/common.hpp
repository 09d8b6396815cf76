#pragma once

#include <limits>
#include <stdexcept>
#include <string>

namespace kcl {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

// Bad input: shapes, ranges, missing config fields. Maps to exit code 2.
class ValidationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Something went wrong inside a computation. Maps to exit code 3.
class NumericalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string version_string();

}  // namespace kcl
