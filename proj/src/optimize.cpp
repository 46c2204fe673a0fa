#include "stcap/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "stcap/errors.hpp"

namespace stcap::opt {
namespace {

class Tracker {
 public:
  explicit Tracker(const std::function<double(double)>& f) : f_(f) {}

  double operator()(double x) {
    const double v = f_(x);
    ++evaluations_;
    if (!std::isfinite(v)) {
      std::ostringstream msg;
      msg << "maximize_1d: objective is not finite at x = " << x;
      throw NonFiniteObjective(msg.str(), x);
    }
    if (evaluations_ == 1 || v > best_value_) {
      best_value_ = v;
      best_x_ = x;
    }
    return v;
  }

  MaximizeResult result() const { return {best_x_, best_value_, evaluations_}; }

 private:
  const std::function<double(double)>& f_;
  double best_x_ = 0.0;
  double best_value_ = 0.0;
  int evaluations_ = 0;
};

}  // namespace

MaximizeResult maximize_1d(const std::function<double(double)>& objective, Interval bracket,
                           double tolerance, int grid_points) {
  if (!(bracket.hi >= bracket.lo) || !std::isfinite(bracket.lo) || !std::isfinite(bracket.hi)) {
    throw DomainError("maximize_1d: bracket must be a finite, nonempty interval");
  }
  if (!(tolerance > 0.0)) throw DomainError("maximize_1d: tolerance must be > 0");
  if (grid_points < 2) grid_points = 2;

  Tracker eval(objective);
  if (bracket.hi == bracket.lo) {
    eval(bracket.lo);
    return eval.result();
  }

  const double step = (bracket.hi - bracket.lo) / (grid_points - 1);
  int best = 0;
  double best_value = 0.0;
  for (int i = 0; i < grid_points; ++i) {
    const double x = (i == grid_points - 1) ? bracket.hi : bracket.lo + i * step;
    const double v = eval(x);
    if (i == 0 || v > best_value) {
      best_value = v;
      best = i;
    }
  }

  double a = bracket.lo + std::max(best - 1, 0) * step;
  double b = (best + 1 >= grid_points) ? bracket.hi : bracket.lo + (best + 1) * step;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double fc = eval(c);
  double fd = eval(d);
  while (b - a > tolerance) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - inv_phi * (b - a);
      fc = eval(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + inv_phi * (b - a);
      fd = eval(d);
    }
  }
  return eval.result();
}

double bisect_decreasing_log(const std::function<double(double)>& f, double lo, double hi,
                             double rel_tolerance) {
  if (!(lo > 0.0 && hi > lo)) throw DomainError("bisect_decreasing_log: need 0 < lo < hi");
  for (int i = 0; i < 400 && hi / lo - 1.0 > rel_tolerance; ++i) {
    const double mid = std::sqrt(lo * hi);
    if (f(mid) > 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return std::sqrt(lo * hi);
}

double bisect_increasing(const std::function<double(double)>& f, double lo, double hi,
                         double abs_tolerance) {
  if (!(hi > lo)) throw DomainError("bisect_increasing: need lo < hi");
  for (int i = 0; i < 400 && hi - lo > abs_tolerance; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (f(mid) < 0.0) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace stcap::opt
