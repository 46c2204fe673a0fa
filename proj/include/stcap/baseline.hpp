#pragma once

#include "stcap/types.hpp"

// Closed-form analytics for networks without secrecy guard zones.
//
// The reported capacity is the lower bound obtained by sizing the rate
// redundancy R_e from the upper bound on secrecy outage. It is accurate for
// all sigma, epsilon and tight as epsilon -> 0; functions below call it tau.

namespace stcap::baseline {

struct OutageBounds {
  double lower = 0.0;
  double upper = 0.0;
};

struct OpenInterval {
  double lo = 0.0;
  double hi = 1.0;
};

struct SparseSigmaOptimum {
  double kappa = 0.0;
  double sigma_opt = 0.0;
  /// Set when lambda_l * pi * r^2 > 0.1, i.e. outside the sparse regime in
  /// which the closed form was derived.
  bool outside_sparse_regime = false;
};

/// 1 - exp(-lambda pi r^2 beta^(2/alpha) C(alpha)).
double connection_outage(const NetworkParams& params, double beta_t);

/// Codeword rate meeting connection outage sigma with `lambda_active`
/// interferers per unit area (params.lambda_l when not thinned).
double rate_t_from_sigma(const NetworkParams& params, double sigma, double lambda_active);
double rate_t_from_sigma(const NetworkParams& params, double sigma);

/// Lower (nearest eavesdropper) and upper (Jensen) bounds on secrecy outage.
OutageBounds secrecy_outage_bounds(const NetworkParams& params, double beta_e);

/// Rate redundancy that makes the upper secrecy-outage bound equal epsilon.
/// epsilon == 1 gives 0. Throws NumericError for epsilon < 1e-12.
double rate_e_from_epsilon(const NetworkParams& params, double epsilon);

CapacityResult capacity(const NetworkParams& params, const OutageConstraints& constraints);

/// ln(1/(1-sigma)) ln(1/(1-epsilon)) > pi r^2 lambda_e.
bool positivity(const NetworkParams& params, const OutageConstraints& constraints);

/// Values of sigma for which positivity holds at this epsilon.
OpenInterval feasible_sigma_range(const NetworkParams& params, double epsilon);

/// Density maximising tau in the low-capacity regime.
double optimal_lambda_asymptotic(const NetworkParams& params, double epsilon);

/// Closed-form optimal sigma for sparse networks (lambda_l pi r^2 << 1).
SparseSigmaOptimum optimal_sigma_sparse(const NetworkParams& params, double epsilon);

namespace detail {
/// log2(1 + exp(log_x)) without overflow or loss for tiny x.
double log2_1p_exp(double log_x);
/// ln(1/(1-p)), accurate for small p; +inf at p == 1.
double neg_log_complement(double p);
}  // namespace detail

}  // namespace stcap::baseline
