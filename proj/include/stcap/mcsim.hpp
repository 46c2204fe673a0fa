#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "stcap/rng.hpp"
#include "stcap/types.hpp"

// Monte Carlo estimates of connection and secrecy outage on PPP snapshots
// with Rayleigh fading. The typical receiver sits at the origin and the
// typical transmitter at (r, 0).

namespace stcap::mc {

struct Point {
  double x = 0.0;
  double y = 0.0;
};

/// A point of a radially generated process, with its distance to the centre.
struct RadialPoint {
  double x = 0.0;
  double y = 0.0;
  double rho = 0.0;
};

/// PPP of the given density outside a disk of `inner_radius` around `center`,
/// generated lazily in order of increasing distance from the centre. Gaps in
/// rho^2 are exponential with rate density * pi, so the points within any
/// radius do not depend on how far the process was extended.
class RadialProcess {
 public:
  RadialProcess(double density, Point center, double inner_radius, CounterRng rng);

  /// The i-th point if it lies within `limit` of the centre.
  std::optional<RadialPoint> at(std::size_t i, double limit);

  /// Extends the process to `radius` and returns the number of points inside.
  std::size_t cover(double radius);

  const std::vector<RadialPoint>& points() const noexcept { return points_; }

 private:
  void push_next();

  double density_;
  Point center_;
  CounterRng rng_;
  double next_rho2_;
  std::vector<RadialPoint> points_;
};

/// Homogeneous PPP in the disk of `window_radius` around `center`: Poisson
/// count with mean density * pi * radius^2, points uniform in the disk.
std::vector<Point> sample_ppp(double density, double window_radius, CounterRng& rng,
                              Point center = {});

struct MonteCarloConfig {
  std::int64_t trials = 100000;
  /// Interference window around every measurement point. When empty, each
  /// measurement gets the smallest window meeting `tail_tolerance`.
  std::optional<double> window_radius;
  std::uint64_t seed = 0;
  double tail_tolerance = 1e-3;
  /// 0 uses std::thread::hardware_concurrency().
  int threads = 0;
};

void validate(const MonteCarloConfig& config);

struct OutageEstimate {
  double p_hat = 0.0;
  double std_err = 0.0;
  std::int64_t trials = 0;
  std::int64_t events = 0;
};

OutageEstimate make_estimate(std::int64_t events, std::int64_t trials);

struct SecrecyEstimate {
  OutageEstimate any;      ///< some eavesdropper decodes
  OutageEstimate nearest;  ///< the eavesdropper nearest the transmitter decodes
};

struct GuardZoneEstimate {
  OutageEstimate connection;
  OutageEstimate secrecy;
  OutageEstimate nearest;
  /// Fraction of trials in which a probe transmitter at distance 3D from the
  /// typical one has an empty guard zone.
  OutageEstimate active_fraction;
};

/// Smallest window for which the interference beyond it can change the
/// connection outage by at most `tail_tolerance` (relative).
double required_window_connection(const NetworkParams& params, double beta_t,
                                  double tail_tolerance);

/// Same bound for the secrecy outage, with interferers of density
/// `interferer_density` and eavesdroppers outside radius D of the transmitter.
double required_window_eavesdropper(const NetworkParams& params, double beta_e,
                                    double interferer_density, double radius_d,
                                    double tail_tolerance);

/// Eavesdroppers farther than this from the transmitter contribute at most
/// `tail_tolerance` (relative) to the secrecy outage.
double eavesdropper_region_radius(const NetworkParams& params, double beta_e,
                                  double interferer_density, double radius_d,
                                  double tail_tolerance, bool thinned_interferers);

OutageEstimate estimate_connection_outage(const NetworkParams& params, double beta_t,
                                          const MonteCarloConfig& config);

SecrecyEstimate estimate_secrecy_outage(const NetworkParams& params, double beta_e,
                                        const MonteCarloConfig& config);

/// Typical transmitter conditioned active (no eavesdropper within D). Each
/// other transmitter is active iff its own guard zone is empty; silent ones
/// still interfere under the cooperative protocol.
GuardZoneEstimate estimate_guardzone_outages(const NetworkParams& params,
                                             const GuardZoneConfig& guard, double beta_t,
                                             double beta_e, const MonteCarloConfig& config);

}  // namespace stcap::mc
