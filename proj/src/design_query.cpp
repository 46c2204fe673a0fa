#include "stcap/design_query.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>
#include <sstream>

#include "stcap/baseline.hpp"
#include "stcap/guardzone.hpp"

namespace stcap::design {

namespace {

constexpr double kLambdaMax = 0.2;
constexpr double kLambdaMin = 1e-6;
constexpr double kSigmaEdge = 1e-9;

double tau(const NetworkParams& p, const OutageConstraints& c, const GuardZoneConfig& g) {
  if (g.radius_d == 0.0) return baseline::capacity(p, c).tau;
  return guardzone::capacity(p, c, g).tau;
}

std::string infeasible_message(const Query& q) {
  std::ostringstream msg;
  msg << "no positive secrecy transmission capacity for " << to_string(q.target) << " in the search range: ";
  const double area = std::numbers::pi * q.params.r * q.params.r * q.params.lambda_e;
  if (q.guard.radius_d > 0.0 && q.guard.protocol == Protocol::Cooperative) {
    msg << "need (1/(1-sigma))^((D/r)^2) * ln(1/(1-sigma)) * ln(1/(1-epsilon)) > pi r^2 lambda_e = "
        << area;
  } else if (q.guard.radius_d > 0.0) {
    msg << "the secrecy rate R_t - R_e is not positive anywhere";
  } else {
    msg << "need ln(1/(1-sigma)) * ln(1/(1-epsilon)) > pi r^2 lambda_e = " << area;
  }
  return msg.str();
}

}  // namespace

Target parse_target(const std::string& name) {
  if (name == "lambda_l") return Target::LambdaL;
  if (name == "sigma") return Target::Sigma;
  if (name == "guard_d") return Target::GuardD;
  throw DomainError("target: must be one of lambda_l, sigma, guard_d");
}

std::string to_string(Target target) {
  switch (target) {
    case Target::LambdaL:
      return "lambda_l";
    case Target::Sigma:
      return "sigma";
    case Target::GuardD:
      return "guard_d";
  }
  return "?";
}

Answer run_optimize(const Query& q) {
  validate(q.params);
  validate(q.constraints);
  validate(q.guard);

  Answer a;
  a.target = q.target;
  std::function<double(double)> objective;
  double tolerance = 1e-9;

  switch (q.target) {
    case Target::LambdaL: {
      a.bracket = {kLambdaMin, kLambdaMax};
      objective = [&](double lambda) {
        NetworkParams p = q.params;
        p.lambda_l = lambda;
        return tau(p, q.constraints, q.guard);
      };
      if (q.guard.radius_d == 0.0 && q.constraints.epsilon < 1.0 && q.params.lambda_e > 0.0) {
        a.comparator = Comparator{"optimal_lambda_asymptotic",
                                  baseline::optimal_lambda_asymptotic(q.params, q.constraints.epsilon),
                                  "low-capacity regime closed form"};
      }
      break;
    }
    case Target::Sigma: {
      double lo = kSigmaEdge;
      if (q.guard.radius_d == 0.0) {
        lo = baseline::feasible_sigma_range(q.params, q.constraints.epsilon).lo;
      } else if (q.guard.protocol == Protocol::Cooperative) {
        lo = guardzone::coop_min_feasible_sigma(q.params, q.constraints.epsilon, q.guard.radius_d);
      }
      lo = std::max(lo, kSigmaEdge);
      if (!(lo < 1.0 - kSigmaEdge)) throw Infeasible(infeasible_message(q));
      a.bracket = {lo, 1.0 - kSigmaEdge};
      objective = [&](double sigma) {
        return tau(q.params, {sigma, q.constraints.epsilon}, q.guard);
      };
      if (q.guard.radius_d == 0.0) {
        const auto sparse = baseline::optimal_sigma_sparse(q.params, q.constraints.epsilon);
        a.comparator = Comparator{"optimal_sigma_sparse", sparse.sigma_opt,
                                  sparse.outside_sparse_regime
                                      ? "outside the sparse regime (lambda_l pi r^2 > 0.1)"
                                      : "sparse-network closed form"};
      }
      break;
    }
    case Target::GuardD: {
      a.bracket = {0.0, 10.0 * q.params.r};
      tolerance = 1e-9 * q.params.r;
      objective = [&](double d) {
        GuardZoneConfig g = q.guard;
        g.radius_d = d;
        return tau(q.params, q.constraints, g);
      };
      break;
    }
  }

  const auto best = opt::maximize_1d(objective, a.bracket, tolerance);
  if (!(best.max > 0.0)) throw Infeasible(infeasible_message(q));
  a.argmax = best.argmax;
  a.tau_max = best.max;
  return a;
}

}  // namespace stcap::design
