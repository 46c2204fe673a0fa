#pragma once

#include "stcap/types.hpp"

// Secrecy guard zones: a transmitter that detects an eavesdropper within
// radius D either stays silent (non-cooperative) or emits artificial noise
// (cooperative). Both protocols send confidential messages only from the
// thinned set of transmitters with an empty guard zone.

namespace stcap::guardzone {

/// lambda_l exp(-pi lambda_e D^2): density of transmitters with no
/// eavesdropper inside their guard zone.
double active_density(double lambda_l, double lambda_e, double radius_d);

/// Laplace transform of the aggregate interference seen by an eavesdropper
/// when interferers form a homogeneous PPP of density `lambda_active` outside
/// a disk of radius D around it, with unit-mean Rayleigh fading.
///
/// D == 0 gives the unrestricted transform exp(-pi lambda C(alpha) x^(2/alpha)).
class InterferenceLaplace {
 public:
  InterferenceLaplace(double lambda_active, double alpha, double radius_d);

  double operator()(double x) const;
  double log_value(double x) const;

  double lambda_active() const noexcept { return lambda_; }
  double alpha() const noexcept { return alpha_; }
  double radius_d() const noexcept { return radius_; }

 private:
  double lambda_;
  double alpha_;
  double radius_;
  double interference_constant_;
};

double laplace_z(double x, double lambda_active, double alpha, double radius_d);

/// Upper bound on secrecy outage with non-cooperative guard zones:
/// 1 - exp(-2 pi lambda_e int_D^inf L_Z(beta_e r^alpha) r dr), by adaptive
/// quadrature in u = r^2 (absolute tolerance 1e-10 on the integral).
double noncoop_secrecy_outage_ub(const NetworkParams& params, double radius_d, double beta_e);

/// Rate redundancy solving noncoop_secrecy_outage_ub(beta_e) == epsilon.
/// Throws NumericError if the root cannot be bracketed in [1e-12, 1e12].
double noncoop_rate_e(const NetworkParams& params, double epsilon, double radius_d);

CapacityResult noncoop_capacity(const NetworkParams& params, const OutageConstraints& constraints,
                                double radius_d);

/// Closed-form upper bound on secrecy outage with cooperative guard zones.
double coop_secrecy_outage_ub(const NetworkParams& params, double radius_d, double beta_e);

double coop_rate_e(const NetworkParams& params, const OutageConstraints& constraints,
                   double radius_d);

/// Cooperative silent transmitters keep interfering, so R_t uses the full
/// density lambda_l while tau scales with the active density.
CapacityResult coop_capacity(const NetworkParams& params, const OutageConstraints& constraints,
                             double radius_d);

/// (1/(1-sigma))^((D/r)^2) ln(1/(1-sigma)) ln(1/(1-epsilon)) > pi r^2 lambda_e.
bool coop_positivity(const NetworkParams& params, const OutageConstraints& constraints,
                     double radius_d);

/// Smallest sigma for which coop_positivity holds at (epsilon, D).
double coop_min_feasible_sigma(const NetworkParams& params, double epsilon, double radius_d);

/// Dispatches on guard.protocol.
CapacityResult capacity(const NetworkParams& params, const OutageConstraints& constraints,
                        const GuardZoneConfig& guard);

}  // namespace stcap::guardzone
