#pragma once

#include <stdexcept>
#include <string>

namespace polygauge {

/// Raised when an operation is called outside its domain (bad n, r, branch
/// index, or an argument outside the branch interval).
class InvalidParameter : public std::invalid_argument {
 public:
  explicit InvalidParameter(const std::string& what) : std::invalid_argument(what) {}
};

/// Raised when adaptive quadrature hits its depth cap without meeting the
/// requested tolerance.
class QuadratureError : public std::runtime_error {
 public:
  explicit QuadratureError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace polygauge
