#pragma once

#include <optional>
#include <string>

#include "stcap/errors.hpp"
#include "stcap/optimize.hpp"
#include "stcap/types.hpp"

// Design optimization: maximise tau over one variable, holding the rest.

namespace stcap::design {

enum class Target { LambdaL, Sigma, GuardD };

/// Accepts "lambda_l", "sigma" or "guard_d"; throws DomainError otherwise.
Target parse_target(const std::string& name);
std::string to_string(Target target);

struct Query {
  Target target = Target::LambdaL;
  NetworkParams params;
  OutageConstraints constraints;
  GuardZoneConfig guard;
};

struct Comparator {
  std::string name;
  double value = 0.0;
  std::string note;
};

struct Answer {
  Target target = Target::LambdaL;
  opt::Interval bracket;
  double argmax = 0.0;
  double tau_max = 0.0;
  std::optional<Comparator> comparator;
};

/// No value of the target variable gives positive capacity.
class Infeasible : public NumericError {
 public:
  using NumericError::NumericError;
};

/// Brackets: lambda_l in (0, 0.2], sigma over the feasible range (or (0, 1)
/// for the non-cooperative protocol), D in [0, 10 r].
Answer run_optimize(const Query& query);

}  // namespace stcap::design
