#include "stcap/baseline.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "stcap/errors.hpp"
#include "stcap/specfun.hpp"

namespace stcap {

namespace {
void require(bool ok, const char* field, const std::string& rule) {
  if (!ok) throw DomainError(std::string(field) + ": " + rule);
}
}  // namespace

void validate(const NetworkParams& p) {
  require(p.lambda_l > 0.0 && std::isfinite(p.lambda_l), "lambda_l", "must be a finite value > 0");
  require(p.lambda_e >= 0.0 && std::isfinite(p.lambda_e), "lambda_e", "must be a finite value >= 0");
  require(p.alpha > 2.0 && std::isfinite(p.alpha), "alpha", "must be a finite value > 2");
  require(p.r > 0.0 && std::isfinite(p.r), "r", "must be a finite value > 0");
}

void validate(const OutageConstraints& c) {
  require(c.sigma > 0.0 && c.sigma < 1.0, "sigma", "must lie in (0, 1)");
  require(c.epsilon > 0.0 && c.epsilon <= 1.0, "epsilon", "must lie in (0, 1]");
}

void validate(const GuardZoneConfig& g) {
  require(g.radius_d >= 0.0 && std::isfinite(g.radius_d), "radius_d", "must be a finite value >= 0");
}

WynerRates make_rates(double rate_t, double rate_e) {
  WynerRates rates;
  rates.rate_t = rate_t;
  rates.rate_e = rate_e;
  rates.rate_s = rate_t - rate_e;
  rates.beta_t = std::expm1(rate_t * std::numbers::ln2);
  rates.beta_e = std::expm1(rate_e * std::numbers::ln2);
  return rates;
}

}  // namespace stcap

namespace stcap::baseline {

namespace detail {

double log2_1p_exp(double log_x) {
  if (log_x == -std::numeric_limits<double>::infinity()) return 0.0;
  if (log_x > 36.0) return (log_x + std::log1p(std::exp(-log_x))) / std::numbers::ln2;
  return std::log1p(std::exp(log_x)) / std::numbers::ln2;
}

double neg_log_complement(double p) {
  if (p >= 1.0) return std::numeric_limits<double>::infinity();
  return -std::log1p(-p);
}

}  // namespace detail

using detail::log2_1p_exp;
using detail::neg_log_complement;

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kMinEpsilon = 1e-12;

double interference_exponent(const NetworkParams& p, double density, double beta) {
  return density * kPi * p.r * p.r * std::pow(beta, 2.0 / p.alpha) *
         specfun::interference_constant(p.alpha);
}
}  // namespace

double connection_outage(const NetworkParams& params, double beta_t) {
  validate(params);
  if (!(beta_t >= 0.0)) throw DomainError("beta_t: must be >= 0");
  return -std::expm1(-interference_exponent(params, params.lambda_l, beta_t));
}

double rate_t_from_sigma(const NetworkParams& params, double sigma, double lambda_active) {
  validate(params);
  if (!(sigma > 0.0 && sigma < 1.0)) throw DomainError("sigma: must lie in (0, 1)");
  if (!(lambda_active > 0.0)) throw DomainError("lambda_active: must be > 0");
  const double c = specfun::interference_constant(params.alpha);
  const double log_ratio =
      std::log(neg_log_complement(sigma)) - std::log(lambda_active * kPi * params.r * params.r * c);
  return log2_1p_exp(0.5 * params.alpha * log_ratio);
}

double rate_t_from_sigma(const NetworkParams& params, double sigma) {
  return rate_t_from_sigma(params, sigma, params.lambda_l);
}

OutageBounds secrecy_outage_bounds(const NetworkParams& params, double beta_e) {
  validate(params);
  if (!(beta_e >= 0.0)) throw DomainError("beta_e: must be >= 0");
  if (params.lambda_e == 0.0) return {0.0, 0.0};
  if (beta_e == 0.0) return {1.0, 1.0};
  if (std::isinf(beta_e)) return {0.0, 0.0};
  // mean number of eavesdroppers that would individually succeed
  const double m = params.lambda_e /
                   (params.lambda_l * std::pow(beta_e, 2.0 / params.alpha) *
                    specfun::interference_constant(params.alpha));
  return {1.0 / (1.0 + 1.0 / m), -std::expm1(-m)};
}

double rate_e_from_epsilon(const NetworkParams& params, double epsilon) {
  validate(params);
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon: must lie in (0, 1]");
  if (epsilon == 1.0 || params.lambda_e == 0.0) return 0.0;
  if (epsilon < kMinEpsilon) {
    throw NumericError("rate_e_from_epsilon: epsilon below 1e-12 drives R_e to infinity");
  }
  const double c = specfun::interference_constant(params.alpha);
  const double log_base = std::log(params.lambda_l / params.lambda_e) + std::log(c) +
                          std::log(neg_log_complement(epsilon));
  return log2_1p_exp(-0.5 * params.alpha * log_base);
}

CapacityResult capacity(const NetworkParams& params, const OutageConstraints& constraints) {
  validate(params);
  validate(constraints);
  CapacityResult result;
  result.rates = make_rates(rate_t_from_sigma(params, constraints.sigma),
                            rate_e_from_epsilon(params, constraints.epsilon));
  result.feasible = result.rates.rate_s > 0.0;
  result.tau =
      result.feasible ? (1.0 - constraints.sigma) * params.lambda_l * result.rates.rate_s : 0.0;
  return result;
}

bool positivity(const NetworkParams& params, const OutageConstraints& constraints) {
  validate(params);
  validate(constraints);
  if (constraints.epsilon == 1.0) return true;
  return neg_log_complement(constraints.sigma) * neg_log_complement(constraints.epsilon) >
         kPi * params.r * params.r * params.lambda_e;
}

OpenInterval feasible_sigma_range(const NetworkParams& params, double epsilon) {
  validate(params);
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon: must lie in (0, 1]");
  const double mean_close = kPi * params.r * params.r * params.lambda_e;
  return {-std::expm1(-mean_close / neg_log_complement(epsilon)), 1.0};
}

double optimal_lambda_asymptotic(const NetworkParams& params, double epsilon) {
  validate(params);
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw DomainError("epsilon: must lie in (0, 1)");
  const double a = params.alpha;
  return std::pow(2.0 / (a - 2.0), 2.0 / a) * params.lambda_e /
         (specfun::interference_constant(a) * neg_log_complement(epsilon));
}

SparseSigmaOptimum optimal_sigma_sparse(const NetworkParams& params, double epsilon) {
  validate(params);
  if (!(epsilon > 0.0 && epsilon <= 1.0)) throw DomainError("epsilon: must lie in (0, 1]");
  const double a = params.alpha;
  const double c = specfun::interference_constant(a);
  const double footprint = params.lambda_l * kPi * params.r * params.r;

  // (1 + X)^(-2/alpha) with X = [(lambda_l/lambda_e) C ln(1/(1-eps))]^(-alpha/2)
  double shrink = 1.0;
  if (epsilon < 1.0 && params.lambda_e > 0.0) {
    const double log_x = -0.5 * a *
                         (std::log(params.lambda_l / params.lambda_e) + std::log(c) +
                          std::log(neg_log_complement(epsilon)));
    shrink = std::exp(-(2.0 / a) * log2_1p_exp(log_x) * std::numbers::ln2);
  }
  SparseSigmaOptimum out;
  out.kappa = shrink / (footprint * c);
  out.sigma_opt = -std::expm1(-1.0 / specfun::lambert_w0(out.kappa));
  out.outside_sparse_regime = footprint > 0.1;
  return out;
}

}  // namespace stcap::baseline
