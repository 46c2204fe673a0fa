#pragma once

#include <stdexcept>
#include <string>

namespace stcap {

/// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// A numeric procedure could not produce a result to the requested accuracy.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class QuadratureError : public NumericError {
 public:
  QuadratureError(const std::string& what, double achieved_abs_error)
      : NumericError(what), achieved_(achieved_abs_error) {}

  double achieved_abs_error() const noexcept { return achieved_; }

 private:
  double achieved_;
};

class NonFiniteObjective : public NumericError {
 public:
  NonFiniteObjective(const std::string& what, double point)
      : NumericError(what), point_(point) {}

  double point() const noexcept { return point_; }

 private:
  double point_;
};

/// Monte-Carlo window does not satisfy the configured tail tolerance.
class WindowTooSmall : public std::invalid_argument {
 public:
  WindowTooSmall(const std::string& what, double required)
      : std::invalid_argument(what), required_(required) {}

  double required_radius() const noexcept { return required_; }

 private:
  double required_;
};

}  // namespace stcap
