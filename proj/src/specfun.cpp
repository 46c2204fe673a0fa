#include "stcap/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stcap/errors.hpp"

namespace stcap::specfun {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxTerms = 100000;
constexpr long kMaxTermsSlow = 200000000;

bool is_nonpositive_integer(double a) { return a <= 0.0 && a == std::floor(a); }

// Gamma(a, x) = Gamma(a) - x^a sum_n (-x)^n / (n! (a + n)); valid for a not in
// {0, -1, -2, ...}. Used for small x only, where the alternating sum is benign.
SpecFunResult incomplete_gamma_series(double a, double x) {
  double term = 1.0;  // (-x)^n / n!
  double sum = 1.0 / a;
  double last = std::abs(sum);
  for (int n = 1; n < kMaxTerms; ++n) {
    term *= -x / n;
    const double contrib = term / (a + n);
    sum += contrib;
    last = std::abs(contrib);
    if (last <= kEps * std::abs(sum) * 0.5) break;
  }
  const double xa = std::pow(x, a);
  const double gamma_a = std::tgamma(a);
  const double value = gamma_a - xa * sum;
  const double err = xa * last + 4.0 * kEps * (std::abs(gamma_a) + std::abs(xa * sum));
  return {value, err};
}

// a > 0: Gamma(a, x) = Gamma(a) - e^-x x^a sum_n x^n / (a (a+1) ... (a+n)).
SpecFunResult lower_gamma_complement(double a, double x) {
  double term = 1.0 / a;
  double sum = term;
  for (int n = 1; n < kMaxTerms; ++n) {
    term *= x / (a + n);
    sum += term;
    if (term <= kEps * sum * 0.5) break;
  }
  const double lower = sum * std::exp(-x + a * std::log(x));
  const double gamma_a = std::tgamma(a);
  const double value = gamma_a - lower;
  return {value, 4.0 * kEps * (gamma_a + lower)};
}

// Gamma(0, x) = E1(x) = -gamma - ln x - sum_{n>=1} (-x)^n / (n n!).
SpecFunResult exponential_integral_series(double x) {
  double term = 1.0;
  double sum = 0.0;
  double last = 0.0;
  for (int n = 1; n < kMaxTerms; ++n) {
    term *= -x / n;
    const double contrib = term / n;
    sum += contrib;
    last = std::abs(contrib);
    if (last <= kEps * std::abs(sum) * 0.5) break;
  }
  const double value = -std::numbers::egamma - std::log(x) - sum;
  return {value, last + 4.0 * kEps * std::abs(value)};
}

// Modified Lentz evaluation of
// Gamma(a, x) = e^-x x^a / (x + 1 - a - 1(1 - a) / (x + 3 - a - 2(2 - a) / ...)).
SpecFunResult incomplete_gamma_continued_fraction(double a, double x) {
  constexpr double kTiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / kTiny;
  double d = 1.0 / b;
  double h = d;
  double delta = 0.0;
  for (int i = 1; i < kMaxTerms; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < kTiny) d = kTiny;
    c = b + an / c;
    if (std::abs(c) < kTiny) c = kTiny;
    d = 1.0 / d;
    delta = d * c;
    h *= delta;
    if (std::abs(delta - 1.0) <= kEps) break;
  }
  const double prefactor = std::exp(-x + a * std::log(x));
  const double value = prefactor * h;
  return {value, std::abs(value) * (std::abs(delta - 1.0) + 8.0 * kEps)};
}

// Plain power series of 2F1(a, b; c; z) with a = 1 (so term ratio is
// (b + n) z / (c + n)). Returns sum and an estimate of the neglected tail.
SpecFunResult series_2f1_a1(double b, double c, double z, long max_terms = kMaxTerms) {
  double term = 1.0;
  double sum = 1.0;
  for (long n = 0; n < max_terms; ++n) {
    const double ratio = (b + n) / (c + n) * z;
    term *= ratio;
    sum += term;
    // Later ratios lie between the current one and their limit z, so the tail
    // is dominated by a geometric series with ratio max(ratio, z).
    const double bound = std::max(ratio, z);
    if (bound < 1.0 && term <= kEps * sum * (1.0 - bound)) {
      const double tail = term * bound / (1.0 - bound);
      return {sum, tail + 2.0 * kEps * sum};
    }
  }
  throw NumericError("2F1 series failed to converge for z = " + std::to_string(z));
}

}  // namespace

double interference_constant(double alpha) {
  if (!(alpha > 2.0)) {
    throw DomainError("interference_constant: alpha must exceed 2, got " + std::to_string(alpha));
  }
  if (std::isinf(alpha)) return 1.0;
  const double x = 2.0 * std::numbers::pi / alpha;
  return x / std::sin(x);
}

SpecFunResult lambert_w0_with_error(double x) {
  if (std::isnan(x) || x < 0.0) {
    throw DomainError("lambert_w0: argument must be >= 0, got " + std::to_string(x));
  }
  if (x == 0.0) return {0.0, 0.0};
  if (std::isinf(x)) return {x, 0.0};

  double w = std::log1p(x);
  if (x > 3.0) {
    const double l1 = std::log(x);
    w = l1 - std::log(l1);
  }
  double step = 0.0;
  for (int i = 0; i < 64; ++i) {
    const double ew = std::exp(w);
    const double f = w * ew - x;
    const double wp1 = w + 1.0;
    // Halley: w -= f / (e^w (w+1) - (w+2) f / (2 (w+1)))
    step = f / (ew * wp1 - (w + 2.0) * f / (2.0 * wp1));
    w -= step;
    if (std::abs(step) <= 4.0 * kEps * (1.0 + std::abs(w))) break;
  }
  return {w, std::abs(step) + 2.0 * kEps * w};
}

double lambert_w0(double x) { return lambert_w0_with_error(x).value; }

SpecFunResult upper_incomplete_gamma_with_error(double a, double x) {
  if (std::isnan(a) || std::isnan(x) || x < 0.0) {
    throw DomainError("upper_incomplete_gamma: x must be >= 0");
  }
  if (x == 0.0) {
    if (!(a > 0.0)) {
      throw DomainError("upper_incomplete_gamma: Gamma(a, 0) diverges for a <= 0");
    }
    return {std::tgamma(a), 4.0 * kEps * std::tgamma(a)};
  }
  if (std::isinf(x)) return {0.0, 0.0};
  if (x >= a + 1.0) return incomplete_gamma_continued_fraction(a, x);
  if (a > 0.0) return lower_gamma_complement(a, x);
  if (a == 0.0) return exponential_integral_series(x);
  if (is_nonpositive_integer(a)) {
    // Unreachable: x >= 0 >= a + 1 takes the continued-fraction branch.
    throw DomainError("upper_incomplete_gamma: unsupported a = " + std::to_string(a));
  }
  return incomplete_gamma_series(a, x);
}

double upper_incomplete_gamma(double a, double x) {
  return upper_incomplete_gamma_with_error(a, x).value;
}

SpecFunResult gauss_2f1_12c_with_error(double c, double z) {
  if (!(c > 2.0)) {
    throw DomainError("gauss_2f1_12c: c must exceed 2, got " + std::to_string(c));
  }
  if (std::isnan(z) || z < 0.0 || z >= 1.0) {
    throw DomainError("gauss_2f1_12c: z must lie in [0, 1), got " + std::to_string(z));
  }
  if (z == 0.0) return {1.0, 0.0};
  if (z <= 0.7 || c >= 3.0) {
    if (z > 0.7 && c == 3.0) {
      // c = 3 collapses to 2F1(1,2;3;z) = -2 (z + ln(1 - z)) / z^2.
      const double v = -2.0 * (z + std::log1p(-z)) / (z * z);
      return {v, 16.0 * kEps * v};
    }
    // For c > 3 the series still converges at z -> 1, but needs O(1/(1-z)) terms.
    return series_2f1_a1(2.0, c, z, z <= 0.7 ? kMaxTerms : kMaxTermsSlow);
  }

  // 2F1(1,2;c;z) = (c-1)/(c-3) 2F1(1,2;4-c;1-z)
  //              + Gamma(c) Gamma(3-c) (1-z)^(c-3) z^(1-c)
  // (the second hypergeometric factor, 2F1(c-1,c-2;c-2;1-z), is z^(1-c)).
  const double y = 1.0 - z;
  const auto regular = series_2f1_a1(2.0, 4.0 - c, y);
  const double coeff = (c - 1.0) / (c - 3.0);
  const double singular =
      std::tgamma(c) * std::tgamma(3.0 - c) * std::exp((c - 3.0) * std::log(y) + (1.0 - c) * std::log(z));
  const double value = coeff * regular.value + singular;
  const double err = std::abs(coeff) * regular.est_abs_error +
                     8.0 * kEps * (std::abs(coeff * regular.value) + std::abs(singular));
  return {value, err};
}

double gauss_2f1_12c(double c, double z) { return gauss_2f1_12c_with_error(c, z).value; }

}  // namespace stcap::specfun
