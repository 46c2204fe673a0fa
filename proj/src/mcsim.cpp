#include "stcap/mcsim.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>
#include <thread>

#include "stcap/baseline.hpp"
#include "stcap/errors.hpp"
#include "stcap/guardzone.hpp"
#include "stcap/specfun.hpp"

namespace stcap::mc {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr std::int64_t kBlockSize = 1024;

enum Lane : std::uint64_t {
  kLaneInterferers = 1,
  kLaneEavesdroppers = 2,
  kLaneReceiverFading = 3,
  kLaneEavesdropperFading = 4,
};

// e^x Gamma(a, x), bounded above by x^(a-1) x / (x - a + 1) once e^x overflows.
double scaled_upper_gamma(double a, double x) {
  if (x < 600.0) return std::exp(x) * specfun::upper_incomplete_gamma(a, x);
  return std::pow(x, a - 1.0) * x / (x - (a - 1.0));
}

double success_exponent(const NetworkParams& params, double beta_e, double interferer_density) {
  return kPi * interferer_density * std::pow(beta_e, 2.0 / params.alpha) *
         specfun::interference_constant(params.alpha);
}

void check_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("tail_tolerance: must be > 0");
}

void check_beta(double beta, const char* name) {
  if (!(beta >= 0.0)) throw DomainError(std::string(name) + ": must be >= 0");
}

double pick_window(const MonteCarloConfig& config, double required, const char* what) {
  if (!config.window_radius) return required;
  if (*config.window_radius < required) {
    std::ostringstream msg;
    msg << "window_radius " << *config.window_radius << " is too small for the " << what
        << " measurement at tail_tolerance " << config.tail_tolerance << "; need at least "
        << required;
    throw WindowTooSmall(msg.str(), required);
  }
  return *config.window_radius;
}

enum class Forced { None, Always, Never };

struct Setup {
  NetworkParams params;
  std::uint64_t seed = 0;
  double radius_d = 0.0;
  bool thinned = false;

  bool want_connection = false;
  double beta_t = 0.0;
  double window_c = 0.0;

  bool want_secrecy = false;
  Forced secrecy_forced = Forced::None;
  double beta_e = 0.0;
  double window_s = 0.0;
  double region = 0.0;

  bool want_active = false;
};

struct Counts {
  std::int64_t connection = 0;
  std::int64_t any = 0;
  std::int64_t nearest = 0;
  std::int64_t active = 0;

  Counts& operator+=(const Counts& o) {
    connection += o.connection;
    any += o.any;
    nearest += o.nearest;
    active += o.active;
    return *this;
  }
};

class Trial {
 public:
  Trial(const Setup& s, std::uint64_t trial)
      : s_(s),
        trial_(trial),
        alpha4_(s.params.alpha == 4.0),
        interferers_(s.params.lambda_l, {s.params.r, 0.0}, 0.0,
                     CounterRng(s.seed, trial, kLaneInterferers)),
        eavesdroppers_(s.params.lambda_e, {s.params.r, 0.0}, s.radius_d,
                       CounterRng(s.seed, trial, kLaneEavesdroppers)) {}

  Counts run() {
    Counts c;
    if (s_.want_connection && connection_outage()) c.connection = 1;
    if (s_.want_secrecy) {
      const auto [any, nearest] = secrecy_outage();
      c.any = any ? 1 : 0;
      c.nearest = nearest ? 1 : 0;
    }
    if (s_.want_active) {
      const double d = s_.radius_d;
      const bool silent = d > 0.0 && has_eavesdropper_within(s_.params.r + 3.0 * d, 0.0, 3.0 * d);
      c.active = silent ? 0 : 1;
    }
    return c;
  }

 private:
  enum : signed char { kUnknown = 0, kActive = 1, kSilent = 2 };

  double path_loss(double d2) const {
    return alpha4_ ? 1.0 / (d2 * d2) : std::pow(d2, -0.5 * s_.params.alpha);
  }

  bool has_eavesdropper_within(double x, double y, double rho) {
    const double d = s_.radius_d;
    const std::size_t n = eavesdroppers_.cover(rho + d);
    const auto& pts = eavesdroppers_.points();
    auto first = std::lower_bound(pts.begin(), pts.begin() + static_cast<std::ptrdiff_t>(n),
                                  rho - d, [](const RadialPoint& p, double v) { return p.rho < v; });
    for (auto it = first; it != pts.begin() + static_cast<std::ptrdiff_t>(n); ++it) {
      if (it->rho > rho + d) break;
      const double dx = it->x - x;
      const double dy = it->y - y;
      if (dx * dx + dy * dy <= d * d) return true;
    }
    return false;
  }

  bool active(std::size_t i, const RadialPoint& p) {
    if (!s_.thinned) return true;
    if (state_.size() <= i) state_.resize(i + 1, kUnknown);
    if (state_[i] == kUnknown) {
      state_[i] = has_eavesdropper_within(p.x, p.y, p.rho) ? kSilent : kActive;
    }
    return state_[i] == kActive;
  }

  // Sums interference at (x, y) from interferers within `window`, stopping as
  // soon as beta * I reaches `signal` (or exceeds it, if `strict`).
  bool interference_reaches(double x, double y, double rho, double window, double beta,
                            double signal, bool strict, CounterRng& fading) {
    const double limit = rho + window;
    const double w2 = window * window;
    double interference = 0.0;
    for (std::size_t i = 0;; ++i) {
      const auto p = interferers_.at(i, limit);
      if (!p) return false;
      const double dx = p->x - x;
      const double dy = p->y - y;
      const double d2 = dx * dx + dy * dy;
      if (d2 > w2) continue;
      const double gain = fading.exponential();
      if (!active(i, *p)) continue;
      interference += gain * path_loss(d2);
      const double level = beta * interference;
      if (strict ? level > signal : level >= signal) return true;
    }
  }

  bool connection_outage() {
    if (s_.beta_t == 0.0) return false;
    CounterRng fading(s_.seed, trial_, kLaneReceiverFading);
    const double r = s_.params.r;
    const double signal = fading.exponential() * path_loss(r * r);
    return interference_reaches(0.0, 0.0, r, s_.window_c, s_.beta_t, signal, true, fading);
  }

  std::pair<bool, bool> secrecy_outage() {
    if (s_.secrecy_forced == Forced::Always) return {true, true};
    if (s_.secrecy_forced == Forced::Never) return {false, false};
    for (std::size_t j = 0;; ++j) {
      const auto e = eavesdroppers_.at(j, s_.region);
      if (!e) return {false, false};
      CounterRng fading(s_.seed, trial_, kLaneEavesdropperFading, j);
      const double signal = fading.exponential() * path_loss(e->rho * e->rho);
      if (!interference_reaches(e->x, e->y, e->rho, s_.window_s, s_.beta_e, signal, false,
                                fading)) {
        return {true, j == 0};
      }
    }
  }

  const Setup& s_;
  std::uint64_t trial_;
  bool alpha4_;
  RadialProcess interferers_;
  RadialProcess eavesdroppers_;
  std::vector<signed char> state_;
};

Counts run_trials(const Setup& setup, const MonteCarloConfig& config) {
  const std::int64_t blocks = (config.trials + kBlockSize - 1) / kBlockSize;
  int threads = config.threads > 0 ? config.threads
                                   : static_cast<int>(std::thread::hardware_concurrency());
  threads = static_cast<int>(std::clamp<std::int64_t>(threads, 1, blocks));

  std::atomic<std::int64_t> next_block{0};
  std::vector<Counts> partial(static_cast<std::size_t>(threads));
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(threads));

  auto worker = [&](std::size_t t) {
    try {
      for (;;) {
        const std::int64_t b = next_block.fetch_add(1);
        if (b >= blocks) break;
        const std::int64_t end = std::min(config.trials, (b + 1) * kBlockSize);
        for (std::int64_t i = b * kBlockSize; i < end; ++i) {
          partial[t] += Trial(setup, static_cast<std::uint64_t>(i)).run();
        }
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker, static_cast<std::size_t>(t));
  }

  Counts total;
  for (std::size_t t = 0; t < partial.size(); ++t) {
    if (errors[t]) std::rethrow_exception(errors[t]);
    total += partial[t];
  }
  return total;
}

void configure_connection(Setup& s, double beta_t, const MonteCarloConfig& config) {
  s.want_connection = true;
  s.beta_t = beta_t;
  if (beta_t > 0.0) {
    s.window_c = pick_window(
        config, required_window_connection(s.params, beta_t, config.tail_tolerance), "receiver");
  }
}

void configure_secrecy(Setup& s, double beta_e, double interferer_density,
                       const MonteCarloConfig& config) {
  s.want_secrecy = true;
  s.beta_e = beta_e;
  if (s.params.lambda_e == 0.0 || std::isinf(beta_e)) {
    s.secrecy_forced = Forced::Never;
  } else if (beta_e == 0.0 || interferer_density == 0.0) {
    s.secrecy_forced = Forced::Always;
  } else {
    s.window_s = pick_window(config,
                             required_window_eavesdropper(s.params, beta_e, interferer_density,
                                                          s.radius_d, config.tail_tolerance),
                             "eavesdropper");
    s.region = eavesdropper_region_radius(s.params, beta_e, interferer_density, s.radius_d,
                                          config.tail_tolerance, s.thinned);
  }
}

}  // namespace

RadialProcess::RadialProcess(double density, Point center, double inner_radius, CounterRng rng)
    : density_(density), center_(center), rng_(rng), next_rho2_(kInf) {
  if (!(density >= 0.0) || !std::isfinite(density)) throw DomainError("density: must be >= 0");
  if (!(inner_radius >= 0.0)) throw DomainError("inner_radius: must be >= 0");
  if (density > 0.0) next_rho2_ = inner_radius * inner_radius + rng_.exponential() / (density_ * kPi);
}

void RadialProcess::push_next() {
  const double rho = std::sqrt(next_rho2_);
  const double theta = 2.0 * kPi * rng_.uniform();
  points_.push_back({center_.x + rho * std::cos(theta), center_.y + rho * std::sin(theta), rho});
  next_rho2_ += rng_.exponential() / (density_ * kPi);
}

std::optional<RadialPoint> RadialProcess::at(std::size_t i, double limit) {
  const double limit2 = limit * limit;
  while (points_.size() <= i && next_rho2_ <= limit2) push_next();
  if (i < points_.size() && points_[i].rho <= limit) return points_[i];
  return std::nullopt;
}

std::size_t RadialProcess::cover(double radius) {
  const double radius2 = radius * radius;
  while (next_rho2_ <= radius2) push_next();
  auto end = std::upper_bound(points_.begin(), points_.end(), radius,
                              [](double v, const RadialPoint& p) { return v < p.rho; });
  return static_cast<std::size_t>(end - points_.begin());
}

std::vector<Point> sample_ppp(double density, double window_radius, CounterRng& rng,
                              Point center) {
  if (!(density >= 0.0) || !std::isfinite(density)) throw DomainError("density: must be >= 0");
  if (!(window_radius >= 0.0) || !std::isfinite(window_radius)) {
    throw DomainError("window_radius: must be a finite value >= 0");
  }
  std::vector<Point> out;
  if (density == 0.0) return out;
  const double radius2 = window_radius * window_radius;
  double rho2 = rng.exponential() / (density * kPi);
  while (rho2 <= radius2) {
    const double rho = std::sqrt(rho2);
    const double theta = 2.0 * kPi * rng.uniform();
    out.push_back({center.x + rho * std::cos(theta), center.y + rho * std::sin(theta)});
    rho2 += rng.exponential() / (density * kPi);
  }
  return out;
}

void validate(const MonteCarloConfig& config) {
  if (config.trials < 1) throw DomainError("trials: must be >= 1");
  if (config.window_radius && !(*config.window_radius > 0.0 && std::isfinite(*config.window_radius))) {
    throw DomainError("window_radius: must be a finite value > 0");
  }
  check_tolerance(config.tail_tolerance);
  if (config.threads < 0) throw DomainError("threads: must be >= 0");
}

OutageEstimate make_estimate(std::int64_t events, std::int64_t trials) {
  OutageEstimate e;
  e.trials = trials;
  e.events = events;
  e.p_hat = static_cast<double>(events) / static_cast<double>(trials);
  e.std_err = std::sqrt(e.p_hat * (1.0 - e.p_hat) / static_cast<double>(trials));
  return e;
}

double required_window_connection(const NetworkParams& params, double beta_t,
                                  double tail_tolerance) {
  validate(params);
  check_beta(beta_t, "beta_t");
  check_tolerance(tail_tolerance);
  if (beta_t == 0.0) return 0.0;
  const double a = params.alpha;
  const double c = specfun::interference_constant(a);
  const double log_scale = std::log(2.0 / ((a - 2.0) * c * tail_tolerance)) +
                           (1.0 - 2.0 / a) * std::log(beta_t);
  return params.r * std::exp(log_scale / (a - 2.0));
}

double required_window_eavesdropper(const NetworkParams& params, double beta_e,
                                    double interferer_density, double radius_d,
                                    double tail_tolerance) {
  validate(params);
  check_beta(beta_e, "beta_e");
  check_tolerance(tail_tolerance);
  if (!(interferer_density >= 0.0)) throw DomainError("interferer_density: must be >= 0");
  if (params.lambda_e == 0.0 || beta_e == 0.0 || interferer_density == 0.0) return 0.0;
  const double a = params.alpha;
  const double k = success_exponent(params, beta_e, interferer_density);
  const double log_moment =
      std::log(scaled_upper_gamma(0.5 * a + 1.0, k * radius_d * radius_d)) - 0.5 * a * std::log(k);
  const double log_scale =
      std::log(2.0 * kPi * interferer_density * beta_e / ((a - 2.0) * tail_tolerance)) + log_moment;
  return std::exp(log_scale / (a - 2.0));
}

double eavesdropper_region_radius(const NetworkParams& params, double beta_e,
                                  double interferer_density, double radius_d,
                                  double tail_tolerance, bool thinned_interferers) {
  validate(params);
  check_beta(beta_e, "beta_e");
  check_tolerance(tail_tolerance);
  if (params.lambda_e == 0.0) return 0.0;
  if (beta_e == 0.0 || interferer_density == 0.0) return kInf;
  const double k = success_exponent(params, beta_e, interferer_density);
  double excess = std::log(1.0 / tail_tolerance);
  if (thinned_interferers) excess += kPi * interferer_density * radius_d * radius_d;
  return std::sqrt(radius_d * radius_d + std::max(excess, 0.0) / k);
}

OutageEstimate estimate_connection_outage(const NetworkParams& params, double beta_t,
                                          const MonteCarloConfig& config) {
  validate(params);
  validate(config);
  check_beta(beta_t, "beta_t");
  Setup s;
  s.params = params;
  s.seed = config.seed;
  configure_connection(s, beta_t, config);
  return make_estimate(run_trials(s, config).connection, config.trials);
}

SecrecyEstimate estimate_secrecy_outage(const NetworkParams& params, double beta_e,
                                        const MonteCarloConfig& config) {
  validate(params);
  validate(config);
  check_beta(beta_e, "beta_e");
  Setup s;
  s.params = params;
  s.seed = config.seed;
  configure_secrecy(s, beta_e, params.lambda_l, config);
  const Counts c = run_trials(s, config);
  return {make_estimate(c.any, config.trials), make_estimate(c.nearest, config.trials)};
}

GuardZoneEstimate estimate_guardzone_outages(const NetworkParams& params,
                                             const GuardZoneConfig& guard, double beta_t,
                                             double beta_e, const MonteCarloConfig& config) {
  validate(params);
  validate(guard);
  validate(config);
  check_beta(beta_t, "beta_t");
  check_beta(beta_e, "beta_e");
  Setup s;
  s.params = params;
  s.seed = config.seed;
  s.radius_d = guard.radius_d;
  s.thinned = guard.protocol == Protocol::NonCooperative && guard.radius_d > 0.0;
  const double interferer_density =
      s.thinned ? guardzone::active_density(params.lambda_l, params.lambda_e, guard.radius_d)
                : params.lambda_l;
  configure_connection(s, beta_t, config);
  configure_secrecy(s, beta_e, interferer_density, config);
  s.want_active = true;
  const Counts c = run_trials(s, config);
  GuardZoneEstimate out;
  out.connection = make_estimate(c.connection, config.trials);
  out.secrecy = make_estimate(c.any, config.trials);
  out.nearest = make_estimate(c.nearest, config.trials);
  out.active_fraction = make_estimate(c.active, config.trials);
  return out;
}

}  // namespace stcap::mc
