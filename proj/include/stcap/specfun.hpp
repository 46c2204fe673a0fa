#pragma once

// Special functions needed by the capacity analytics. Each evaluator comes in
// two flavours: a `*_with_error` form that also reports an estimate of the
// truncation error of the series / iteration used, and a plain form that
// returns the value only.

namespace stcap::specfun {

struct SpecFunResult {
  double value = 0.0;
  double est_abs_error = 0.0;
};

/// Gamma(1 - 2/alpha) * Gamma(1 + 2/alpha), the Rayleigh-fading interference
/// constant. Evaluated through the reflection formula as x / sin(x) with
/// x = 2*pi/alpha. Throws DomainError for alpha <= 2.
double interference_constant(double alpha);

/// Principal branch W0 on x >= 0 (Halley iteration).
SpecFunResult lambert_w0_with_error(double x);
double lambert_w0(double x);

/// Upper incomplete gamma Gamma(a, x) for x >= 0 and any real a that is not a
/// non-positive integer. Series below x = a + 1, Lentz continued fraction
/// above. Gamma(a, 0) is finite only for a > 0.
SpecFunResult upper_incomplete_gamma_with_error(double a, double x);
double upper_incomplete_gamma(double a, double x);

/// 2F1(1, 2; c; z) for c > 2 and 0 <= z < 1.
///
/// Direct power series for z <= 0.7. Above that the linear transformation to
/// 1 - z is applied; because c - a - b = c - 3 is negative the transformed
/// expression carries the explicit (1 - z)^(c - 3) singular term.
SpecFunResult gauss_2f1_12c_with_error(double c, double z);
double gauss_2f1_12c(double c, double z);

}  // namespace stcap::specfun
