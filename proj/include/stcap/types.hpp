#pragma once

namespace stcap {

/// Network geometry and densities (densities in nodes per unit area).
struct NetworkParams {
  double lambda_l = 0.01;  ///< legitimate transmitter density
  double lambda_e = 0.001; ///< eavesdropper density
  double alpha = 4.0;      ///< path-loss exponent, > 2
  double r = 1.0;          ///< transmitter-receiver distance
};

/// Connection (sigma) and secrecy (epsilon) outage constraints.
/// epsilon == 1 means no secrecy constraint.
struct OutageConstraints {
  double sigma = 0.3;
  double epsilon = 0.01;
};

/// Wyner code rates in bits per channel use, with their SIR thresholds.
struct WynerRates {
  double rate_t = 0.0;
  double rate_e = 0.0;
  double rate_s = 0.0;  ///< rate_t - rate_e; negative means infeasible
  double beta_t = 0.0;  ///< 2^rate_t - 1
  double beta_e = 0.0;  ///< 2^rate_e - 1
};

/// Secrecy transmission capacity (a lower bound, in bits per channel use per
/// unit area). tau is clipped to zero when rate_s <= 0.
struct CapacityResult {
  double tau = 0.0;
  WynerRates rates;
  bool feasible = false;
};

enum class Protocol { NonCooperative, Cooperative };

struct GuardZoneConfig {
  double radius_d = 0.0;
  Protocol protocol = Protocol::Cooperative;
};

/// Throws DomainError naming the offending field.
void validate(const NetworkParams& params);
void validate(const OutageConstraints& constraints);
void validate(const GuardZoneConfig& guard);

/// Builds rates with beta_* = 2^rate - 1 and rate_s = rate_t - rate_e.
WynerRates make_rates(double rate_t, double rate_e);

}  // namespace stcap
