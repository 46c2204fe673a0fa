#pragma once

#include <functional>

namespace stcap::opt {

struct Interval {
  double lo = 0.0;
  double hi = 1.0;
};

struct MaximizeResult {
  double argmax = 0.0;
  double max = 0.0;
  int evaluations = 0;
};

/// Coarse grid (`grid_points` evenly spaced points, both ends included)
/// followed by golden-section refinement around the best grid point, stopping
/// once the refinement bracket is narrower than `tolerance`. The returned
/// point is the best one evaluated; ties keep the earliest point.
///
/// No unimodality is assumed: the grid picks the basin. Throws
/// NonFiniteObjective when the objective returns NaN or +-inf.
MaximizeResult maximize_1d(const std::function<double(double)>& objective, Interval bracket,
                           double tolerance, int grid_points = 64);

/// Bisection for a root of a decreasing function on [lo, hi] in log-space
/// (lo > 0). Stops when hi / lo - 1 < rel_tolerance.
double bisect_decreasing_log(const std::function<double(double)>& f, double lo, double hi,
                             double rel_tolerance = 1e-14);

/// Bisection for a root of an increasing function on [lo, hi].
double bisect_increasing(const std::function<double(double)>& f, double lo, double hi,
                         double abs_tolerance = 1e-15);

}  // namespace stcap::opt
