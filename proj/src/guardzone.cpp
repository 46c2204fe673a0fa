#include "stcap/guardzone.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stcap/baseline.hpp"
#include "stcap/errors.hpp"
#include "stcap/optimize.hpp"
#include "stcap/quadrature.hpp"
#include "stcap/specfun.hpp"

namespace stcap::guardzone {

using baseline::detail::log2_1p_exp;
using baseline::detail::neg_log_complement;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kMinEpsilon = 1e-12;
constexpr double kTailBound = 1e-14;
constexpr double kBetaFloor = 1e-12;
constexpr double kBetaCeiling = 1e12;

void check_radius(double radius_d) {
  if (!(radius_d >= 0.0) || !std::isfinite(radius_d)) {
    throw DomainError("radius_d: must be a finite value >= 0");
  }
}

void check_epsilon(double epsilon) {
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon: must lie in (0, 1]");
}

CapacityResult finish(const WynerRates& rates, double sigma, double lambda_active) {
  CapacityResult out;
  out.rates = rates;
  out.feasible = rates.rate_s > 0.0;
  out.tau = out.feasible ? (1.0 - sigma) * lambda_active * rates.rate_s : 0.0;
  return out;
}
}  // namespace

double active_density(double lambda_l, double lambda_e, double radius_d) {
  if (!(lambda_l >= 0.0) || !(lambda_e >= 0.0)) throw DomainError("densities must be >= 0");
  check_radius(radius_d);
  return lambda_l * std::exp(-kPi * lambda_e * radius_d * radius_d);
}

InterferenceLaplace::InterferenceLaplace(double lambda_active, double alpha, double radius_d)
    : lambda_(lambda_active),
      alpha_(alpha),
      radius_(radius_d),
      interference_constant_(specfun::interference_constant(alpha)) {
  if (!(lambda_active >= 0.0)) throw DomainError("lambda_active: must be >= 0");
  check_radius(radius_d);
}

double InterferenceLaplace::log_value(double x) const {
  if (!(x >= 0.0)) throw DomainError("laplace_z: x must be >= 0");
  if (x == 0.0 || lambda_ == 0.0) return 0.0;
  if (std::isinf(x)) return -std::numeric_limits<double>::infinity();

  const double b = 2.0 / alpha_;
  const double shot = interference_constant_ * std::pow(x, b);
  if (radius_ == 0.0) return -kPi * lambda_ * shot;

  // q = x D^-alpha; the two D-dependent terms are written as D^2 q / (1 + q)
  // to stay finite for tiny D.
  const double d2 = radius_ * radius_;
  const double q = x * std::pow(radius_, -alpha_);
  if (q < 0.5) {
    // Small q: the closed form cancels badly, so sum
    // -2 D^2 sum_k (-1)^k q^(k+1) / (alpha (k+1) - 2) directly.
    double sum = 0.0;
    double power = q;
    for (int k = 1; k < 200; ++k) {
      const double term = power / (alpha_ * k - 2.0);
      sum += (k % 2 == 1) ? term : -term;
      if (term <= 1e-17 * sum) break;
      power *= q;
    }
    return -2.0 * kPi * lambda_ * d2 * sum;
  }
  const double near = d2 * q / (1.0 + q);
  const double z = 1.0 / (1.0 + q);
  const double hyper = specfun::gauss_2f1_12c(2.0 + b, z);
  const double far = d2 * q / ((1.0 + b) * (1.0 + q) * (1.0 + q)) * hyper;
  return kPi * lambda_ * (near - shot + far);
}

double InterferenceLaplace::operator()(double x) const { return std::exp(log_value(x)); }

double laplace_z(double x, double lambda_active, double alpha, double radius_d) {
  return InterferenceLaplace(lambda_active, alpha, radius_d)(x);
}

double noncoop_secrecy_outage_ub(const NetworkParams& params, double radius_d, double beta_e) {
  validate(params);
  check_radius(radius_d);
  if (!(beta_e >= 0.0)) throw DomainError("beta_e: must be >= 0");
  if (params.lambda_e == 0.0 || std::isinf(beta_e)) return 0.0;
  if (beta_e == 0.0) return 1.0;

  const double lambda_active = active_density(params.lambda_l, params.lambda_e, radius_d);
  const InterferenceLaplace laplace(lambda_active, params.alpha, radius_d);
  const double d2 = radius_d * radius_d;
  const double half_alpha = 0.5 * params.alpha;

  // L_Z(beta u^(alpha/2)) <= exp(pi lambda' D^2) exp(-k u); cut where the
  // remaining tail integral is below kTailBound.
  const double k = kPi * lambda_active * specfun::interference_constant(params.alpha) *
                   std::pow(beta_e, 2.0 / params.alpha);
  const double upper =
      std::max(d2, (kPi * lambda_active * d2 + std::log(1.0 / (2.0 * k * kTailBound))) / k);

  auto integrand = [&](double u) {
    return 0.5 * laplace(beta_e * std::pow(u, half_alpha));
  };
  quad::QuadratureOptions opts;
  opts.abs_tolerance = 1e-10;
  const auto integral = quad::integrate(integrand, d2, upper, opts);
  return -std::expm1(-2.0 * kPi * params.lambda_e * integral.value);
}

double noncoop_rate_e(const NetworkParams& params, double epsilon, double radius_d) {
  validate(params);
  check_radius(radius_d);
  check_epsilon(epsilon);
  if (epsilon == 1.0 || params.lambda_e == 0.0) return 0.0;
  if (epsilon < kMinEpsilon) {
    throw NumericError("noncoop_rate_e: epsilon below 1e-12 drives R_e to infinity");
  }

  auto excess = [&](double beta) {
    return noncoop_secrecy_outage_ub(params, radius_d, beta) - epsilon;
  };

  // The cooperative closed form sets the scale of the root.
  const double scale_rate = coop_rate_e(params, {0.5, epsilon}, radius_d);
  const double scale = std::clamp(std::expm1(scale_rate * std::numbers::ln2), kBetaFloor, kBetaCeiling);
  double lo = std::max(scale * 1e-3, kBetaFloor);
  double hi = std::min(scale * 1e3, kBetaCeiling);
  while (excess(lo) <= 0.0) {
    if (lo == kBetaFloor) {
      throw NumericError("noncoop_rate_e: root not bracketed above beta_e = 1e-12");
    }
    hi = lo;
    lo = std::max(lo * 1e-3, kBetaFloor);
  }
  while (excess(hi) > 0.0) {
    if (hi == kBetaCeiling) {
      throw NumericError("noncoop_rate_e: root not bracketed below beta_e = 1e12");
    }
    lo = hi;
    hi = std::min(hi * 1e3, kBetaCeiling);
  }
  const double beta = opt::bisect_decreasing_log(excess, lo, hi, 1e-14);
  return std::log1p(beta) / std::numbers::ln2;
}

CapacityResult noncoop_capacity(const NetworkParams& params, const OutageConstraints& constraints,
                                double radius_d) {
  validate(params);
  validate(constraints);
  check_radius(radius_d);
  const double lambda_active = active_density(params.lambda_l, params.lambda_e, radius_d);
  const auto rates =
      make_rates(baseline::rate_t_from_sigma(params, constraints.sigma, lambda_active),
                 noncoop_rate_e(params, constraints.epsilon, radius_d));
  return finish(rates, constraints.sigma, lambda_active);
}

double coop_secrecy_outage_ub(const NetworkParams& params, double radius_d, double beta_e) {
  validate(params);
  check_radius(radius_d);
  if (!(beta_e >= 0.0)) throw DomainError("beta_e: must be >= 0");
  if (params.lambda_e == 0.0 || std::isinf(beta_e)) return 0.0;
  if (beta_e == 0.0) return 1.0;
  const double k = params.lambda_l * std::pow(beta_e, 2.0 / params.alpha) *
                   specfun::interference_constant(params.alpha);
  const double mean = params.lambda_e * std::exp(-kPi * k * radius_d * radius_d) / k;
  return -std::expm1(-mean);
}

double coop_rate_e(const NetworkParams& params, const OutageConstraints& constraints,
                   double radius_d) {
  validate(params);
  check_radius(radius_d);
  const double epsilon = constraints.epsilon;
  check_epsilon(epsilon);
  if (radius_d == 0.0) return baseline::rate_e_from_epsilon(params, epsilon);
  if (epsilon == 1.0 || params.lambda_e == 0.0) return 0.0;
  if (epsilon < kMinEpsilon) {
    throw NumericError("coop_rate_e: epsilon below 1e-12 drives R_e to infinity");
  }
  const double l_eps = neg_log_complement(epsilon);
  const double c = specfun::interference_constant(params.alpha);
  const double y = params.lambda_e * kPi * radius_d * radius_d / l_eps;
  // W0(y) / (lambda_l pi D^2 C) written as (W0(y)/y) lambda_e / (lambda_l C l_eps)
  const double log_ratio = std::log(specfun::lambert_w0(y) / y) +
                           std::log(params.lambda_e / (params.lambda_l * c * l_eps));
  return log2_1p_exp(0.5 * params.alpha * log_ratio);
}

CapacityResult coop_capacity(const NetworkParams& params, const OutageConstraints& constraints,
                             double radius_d) {
  validate(params);
  validate(constraints);
  check_radius(radius_d);
  const double lambda_active = active_density(params.lambda_l, params.lambda_e, radius_d);
  const auto rates = make_rates(baseline::rate_t_from_sigma(params, constraints.sigma),
                                coop_rate_e(params, constraints, radius_d));
  return finish(rates, constraints.sigma, lambda_active);
}

bool coop_positivity(const NetworkParams& params, const OutageConstraints& constraints,
                     double radius_d) {
  validate(params);
  validate(constraints);
  check_radius(radius_d);
  if (constraints.epsilon == 1.0 || params.lambda_e == 0.0) return true;
  const double l_sigma = neg_log_complement(constraints.sigma);
  const double ratio = radius_d / params.r;
  const double lhs =
      ratio * ratio * l_sigma + std::log(l_sigma) + std::log(neg_log_complement(constraints.epsilon));
  return lhs > std::log(kPi * params.r * params.r * params.lambda_e);
}

double coop_min_feasible_sigma(const NetworkParams& params, double epsilon, double radius_d) {
  validate(params);
  check_radius(radius_d);
  check_epsilon(epsilon);
  if (epsilon == 1.0 || params.lambda_e == 0.0) return 0.0;
  // Boundary in t = ln(1/(1-sigma)): s t + ln t = ln(m) with s = (D/r)^2 and
  // m = pi r^2 lambda_e / ln(1/(1-eps)), so t = W0(s m) / s.
  const double m = kPi * params.r * params.r * params.lambda_e / neg_log_complement(epsilon);
  const double s = (radius_d / params.r) * (radius_d / params.r);
  const double t = (s == 0.0) ? m : specfun::lambert_w0(s * m) / s;
  return -std::expm1(-t);
}

CapacityResult capacity(const NetworkParams& params, const OutageConstraints& constraints,
                        const GuardZoneConfig& guard) {
  validate(guard);
  if (guard.protocol == Protocol::Cooperative) {
    return coop_capacity(params, constraints, guard.radius_d);
  }
  return noncoop_capacity(params, constraints, guard.radius_d);
}

}  // namespace stcap::guardzone
