#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "stcap/mcsim.hpp"
#include "stcap/types.hpp"

// Analytic outage probabilities checked against Monte Carlo estimates.

namespace stcap::validation {

struct ValidateOptions {
  NetworkParams params;
  OutageConstraints constraints;
  GuardZoneConfig guard;
  /// SIR thresholds; derived from sigma and epsilon when unset.
  std::optional<double> beta_t;
  std::optional<double> beta_e;
  mc::MonteCarloConfig mc;
  /// Added to every analytic value. Nonzero only for negative-control runs.
  double analytic_offset = 0.0;
};

enum class Verdict { Pass, Fail, Info };

std::string to_string(Verdict v);

struct Check {
  std::string name;
  double analytic = 0.0;
  /// Accepted range for the estimate (analytic +- 3 se, or an envelope).
  double accept_lo = 0.0;
  double accept_hi = 0.0;
  mc::OutageEstimate estimate;
  Verdict verdict = Verdict::Pass;
  std::string note;
};

struct Report {
  double beta_t = 0.0;
  double beta_e = 0.0;
  std::vector<Check> checks;

  bool passed() const;
};

Report run_validate(const ValidateOptions& options);

void print_report(const Report& report, std::ostream& out);

}  // namespace stcap::validation
