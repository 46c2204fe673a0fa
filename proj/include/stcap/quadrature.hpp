#pragma once

#include <functional>

namespace stcap::quad {

struct QuadratureResult {
  double value = 0.0;
  double abs_error = 0.0;
  int intervals = 0;
};

struct QuadratureOptions {
  double abs_tolerance = 1e-10;
  double rel_tolerance = 0.0;
  int max_intervals = 2000;
};

/// Globally adaptive 7/15-point Gauss-Kronrod integration of f over [a, b].
/// Throws QuadratureError (carrying the achieved error) if the tolerance is
/// not met within max_intervals subdivisions.
QuadratureResult integrate(const std::function<double(double)>& f, double a, double b,
                           const QuadratureOptions& options = {});

}  // namespace stcap::quad
