#include <cstdio>
#include <iostream>
#include <map>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "stcap/design_query.hpp"
#include "stcap/errors.hpp"
#include "stcap/figures.hpp"
#include "stcap/validation.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitValidationFail = 2;
constexpr int kExitNumeric = 3;

struct ModelFlags {
  stcap::NetworkParams params;
  stcap::OutageConstraints constraints;
  stcap::GuardZoneConfig guard;
  std::string protocol = "coop";
  std::map<std::string, CLI::Option*> options;

  bool given(const std::string& name) const {
    auto it = options.find(name);
    return it != options.end() && it->second->count() > 0;
  }

  void resolve() {
    guard.protocol = (protocol == "noncoop") ? stcap::Protocol::NonCooperative
                                             : stcap::Protocol::Cooperative;
  }
};

void add_model_flags(CLI::App* cmd, ModelFlags& f) {
  f.options["lambda_l"] = cmd->add_option("--lambda_l", f.params.lambda_l, "legitimate transmitter density")
                              ->capture_default_str();
  f.options["lambda_e"] =
      cmd->add_option("--lambda_e", f.params.lambda_e, "eavesdropper density")->capture_default_str();
  f.options["alpha"] = cmd->add_option("--alpha", f.params.alpha, "path-loss exponent (> 2)")
                           ->capture_default_str();
  f.options["r"] = cmd->add_option("--r", f.params.r, "transmitter-receiver distance")
                       ->capture_default_str();
  f.options["sigma"] = cmd->add_option("--sigma", f.constraints.sigma, "connection outage constraint")
                           ->capture_default_str();
  f.options["epsilon"] =
      cmd->add_option("--epsilon", f.constraints.epsilon, "secrecy outage constraint (1 = none)")
          ->capture_default_str();
  f.options["radius_d"] = cmd->add_option("--radius_d", f.guard.radius_d, "guard zone radius D")
                              ->capture_default_str();
  f.options["protocol"] = cmd->add_option("--protocol", f.protocol, "guard zone protocol")
                              ->check(CLI::IsMember({"coop", "noncoop"}))
                              ->capture_default_str();
}

int run_figure_command(int id, const std::string& out, std::optional<double> from,
                       std::optional<double> to, std::optional<int> points, ModelFlags& f) {
  const auto fig = stcap::figures::figure_from_int(id);
  for (const auto& field : stcap::figures::controlled_fields(fig)) {
    if (f.given(field)) {
      throw stcap::DomainError(field + ": fixed by figure " + std::to_string(id) +
                               " (swept or one value per curve); use --from/--to/--points for the sweep");
    }
  }
  auto spec = stcap::figures::default_spec(fig);
  if (f.given("lambda_l")) spec.params.lambda_l = f.params.lambda_l;
  if (f.given("lambda_e")) spec.params.lambda_e = f.params.lambda_e;
  if (f.given("alpha")) spec.params.alpha = f.params.alpha;
  if (f.given("r")) spec.params.r = f.params.r;
  if (f.given("sigma")) spec.constraints.sigma = f.constraints.sigma;
  if (f.given("epsilon")) spec.constraints.epsilon = f.constraints.epsilon;
  if (from) spec.sweep.from = *from;
  if (to) spec.sweep.to = *to;
  if (points) spec.sweep.points = *points;
  stcap::figures::run_figure(spec, out);
  return kExitOk;
}

int run_optimize_command(const std::string& target, ModelFlags& f) {
  stcap::design::Query q;
  q.target = stcap::design::parse_target(target);
  q.params = f.params;
  q.constraints = f.constraints;
  q.guard = f.guard;
  const auto a = stcap::design::run_optimize(q);
  std::printf("target = %s\n", stcap::design::to_string(a.target).c_str());
  std::printf("bracket = [%.12g, %.12g]\n", a.bracket.lo, a.bracket.hi);
  std::printf("argmax = %.12g\n", a.argmax);
  std::printf("tau_max = %.12g\n", a.tau_max);
  if (a.comparator) {
    std::printf("%s = %.12g (%s)\n", a.comparator->name.c_str(), a.comparator->value,
                a.comparator->note.c_str());
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secrecy transmission capacity of Poisson wireless networks"};
  app.require_subcommand(1);

  ModelFlags figure_flags;
  int figure_id = 3;
  std::string figure_out;
  std::optional<double> sweep_from;
  std::optional<double> sweep_to;
  std::optional<int> sweep_points;
  auto* figure = app.add_subcommand("figure", "write a figure's curves as CSV");
  figure->add_option("--id", figure_id, "figure number (3-7)")->required()->check(CLI::Range(3, 7));
  figure->add_option("--out", figure_out, "output path (stdout when omitted or '-')");
  figure->add_option("--from", sweep_from, "first sweep value");
  figure->add_option("--to", sweep_to, "last sweep value");
  figure->add_option("--points", sweep_points, "sweep resolution (>= 2)");
  add_model_flags(figure, figure_flags);

  ModelFlags validate_flags;
  stcap::validation::ValidateOptions vopts;
  double window_radius = 0.0;
  auto* validate = app.add_subcommand("validate", "compare analytic outages with Monte Carlo");
  validate->add_option("--trials", vopts.mc.trials, "Monte Carlo trials")->capture_default_str();
  validate->add_option("--seed", vopts.mc.seed, "random seed")->capture_default_str();
  auto* window_opt = validate->add_option("--window_radius", window_radius,
                                          "interference window (auto-sized when omitted)");
  validate->add_option("--tail_tolerance", vopts.mc.tail_tolerance, "truncation tolerance")
      ->capture_default_str();
  validate->add_option("--threads", vopts.mc.threads, "worker threads (0 = all cores)")
      ->capture_default_str();
  validate->add_option("--beta_t", vopts.beta_t, "receiver SIR threshold (default from sigma)");
  validate->add_option("--beta_e", vopts.beta_e, "eavesdropper SIR threshold (default from epsilon)");
  validate->add_option("--analytic_offset", vopts.analytic_offset,
                       "shift applied to analytic values (negative control)");
  add_model_flags(validate, validate_flags);

  ModelFlags optimize_flags;
  std::string target;
  auto* optimize = app.add_subcommand("optimize", "maximise tau over one design variable");
  optimize->add_option("--target", target, "lambda_l, sigma or guard_d")
      ->required()
      ->check(CLI::IsMember({"lambda_l", "sigma", "guard_d"}));
  add_model_flags(optimize, optimize_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (figure->parsed()) {
      figure_flags.resolve();
      return run_figure_command(figure_id, figure_out, sweep_from, sweep_to, sweep_points,
                                figure_flags);
    }
    if (validate->parsed()) {
      validate_flags.resolve();
      vopts.params = validate_flags.params;
      vopts.constraints = validate_flags.constraints;
      vopts.guard = validate_flags.guard;
      if (window_opt->count() > 0) vopts.mc.window_radius = window_radius;
      const auto report = stcap::validation::run_validate(vopts);
      stcap::validation::print_report(report, std::cout);
      return report.passed() ? kExitOk : kExitValidationFail;
    }
    if (optimize->parsed()) {
      optimize_flags.resolve();
      return run_optimize_command(target, optimize_flags);
    }
  } catch (const stcap::DomainError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const stcap::NumericError& e) {
    std::cerr << "numeric error: " << e.what() << '\n';
    return kExitNumeric;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
