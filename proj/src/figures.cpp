#include "stcap/figures.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <stdexcept>

#include "stcap/baseline.hpp"
#include "stcap/errors.hpp"
#include "stcap/guardzone.hpp"
#include "stcap/optimize.hpp"

namespace stcap::figures {

namespace {

const double kEpsilonCurves[] = {0.01, 0.02, 0.05, 1.0};
const double kRadii[] = {0.0, 3.0, 6.0};

struct OptimalZoneCurve {
  double sigma;
  double lambda_l;
};
const OptimalZoneCurve kZoneCurves[] = {{0.1, 0.01}, {0.1, 0.05}, {0.3, 0.01}, {0.3, 0.05}};

std::string eps_label(double eps) { return "tau_eps_" + format_number(eps); }

Table density_sweep(const FigureSpec& spec) {
  Table t;
  t.header.push_back("lambda_l");
  for (double eps : kEpsilonCurves) t.header.push_back(eps_label(eps));
  for (double lambda : sweep_grid(spec.sweep)) {
    std::vector<double> row{lambda};
    NetworkParams p = spec.params;
    p.lambda_l = lambda;
    for (double eps : kEpsilonCurves) {
      row.push_back(baseline::capacity(p, {spec.constraints.sigma, eps}).tau);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table sigma_sweep(const FigureSpec& spec) {
  Table t;
  t.header.push_back("sigma");
  for (double eps : kEpsilonCurves) t.header.push_back(eps_label(eps));
  for (double sigma : sweep_grid(spec.sweep)) {
    std::vector<double> row{sigma};
    for (double eps : kEpsilonCurves) row.push_back(baseline::capacity(spec.params, {sigma, eps}).tau);
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table guard_zone_sweep(const FigureSpec& spec) {
  Table t;
  t.header = {"epsilon", "tau_d0"};
  for (double d : kRadii) {
    if (d == 0.0) continue;
    t.header.push_back("tau_noncoop_d" + format_number(d));
    t.header.push_back("tau_coop_d" + format_number(d));
  }
  for (double eps : sweep_grid(spec.sweep)) {
    const OutageConstraints c{spec.constraints.sigma, eps};
    std::vector<double> row{eps, baseline::capacity(spec.params, c).tau};
    for (double d : kRadii) {
      if (d == 0.0) continue;
      row.push_back(guardzone::noncoop_capacity(spec.params, c, d).tau);
      row.push_back(guardzone::coop_capacity(spec.params, c, d).tau);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table feasibility_boundary(const FigureSpec& spec) {
  Table t;
  t.header.push_back("epsilon");
  for (double d : kRadii) t.header.push_back("sigma_min_d" + format_number(d));
  for (double eps : sweep_grid(spec.sweep)) {
    std::vector<double> row{eps};
    for (double d : kRadii) row.push_back(guardzone::coop_min_feasible_sigma(spec.params, eps, d));
    t.rows.push_back(std::move(row));
  }
  return t;
}

Table optimal_zone(const FigureSpec& spec) {
  Table t;
  t.header.push_back("epsilon");
  for (const auto& c : kZoneCurves) {
    t.header.push_back("d_opt_sigma_" + format_number(c.sigma) + "_lambda_" +
                       format_number(c.lambda_l));
  }
  const opt::Interval bracket{0.0, 10.0 * spec.params.r};
  for (double eps : sweep_grid(spec.sweep)) {
    std::vector<double> row{eps};
    for (const auto& c : kZoneCurves) {
      NetworkParams p = spec.params;
      p.lambda_l = c.lambda_l;
      const OutageConstraints oc{c.sigma, eps};
      auto tau = [&](double d) { return guardzone::coop_capacity(p, oc, d).tau; };
      row.push_back(opt::maximize_1d(tau, bracket, 1e-6 * spec.params.r).argmax);
    }
    t.rows.push_back(std::move(row));
  }
  return t;
}

}  // namespace

FigureId figure_from_int(int id) {
  if (id < 3 || id > 7) throw DomainError("id: figure must be one of 3, 4, 5, 6, 7");
  return static_cast<FigureId>(id);
}

FigureSpec default_spec(FigureId id) {
  FigureSpec s;
  s.id = id;
  s.params = {0.01, 0.001, 4.0, 1.0};
  s.constraints = {0.3, 0.01};
  switch (id) {
    case FigureId::Fig3:
      s.sweep = {1e-3, 0.2, 64, true};
      break;
    case FigureId::Fig4:
      s.sweep = {0.01, 0.99, 64, false};
      break;
    case FigureId::Fig5:
    case FigureId::Fig7:
      s.sweep = {0.01, 0.3, 64, false};
      break;
    case FigureId::Fig6:
      s.sweep = {0.01, 0.99, 64, false};
      break;
  }
  return s;
}

std::string sweep_variable(FigureId id) {
  switch (id) {
    case FigureId::Fig3:
      return "lambda_l";
    case FigureId::Fig4:
      return "sigma";
    default:
      return "epsilon";
  }
}

std::vector<std::string> controlled_fields(FigureId id) {
  switch (id) {
    case FigureId::Fig3:
      return {"lambda_l", "epsilon"};
    case FigureId::Fig4:
      return {"sigma", "epsilon"};
    case FigureId::Fig5:
      return {"epsilon", "radius_d", "protocol"};
    case FigureId::Fig6:
      return {"sigma", "epsilon", "radius_d", "protocol"};
    case FigureId::Fig7:
      return {"lambda_l", "sigma", "epsilon", "radius_d", "protocol"};
  }
  return {};
}

std::vector<double> sweep_grid(const Sweep& sweep) {
  if (sweep.points < 2) throw DomainError("points: sweep resolution must be >= 2");
  if (!(std::isfinite(sweep.from) && std::isfinite(sweep.to))) {
    throw DomainError("from/to: sweep ends must be finite");
  }
  if (sweep.log_spaced && !(sweep.from > 0.0 && sweep.to > 0.0)) {
    throw DomainError("from/to: log-spaced sweep ends must be > 0");
  }
  std::vector<double> grid(static_cast<std::size_t>(sweep.points));
  const double n = sweep.points - 1;
  for (int i = 0; i < sweep.points; ++i) {
    const double t = i / n;
    if (i == sweep.points - 1) {
      grid[i] = sweep.to;
    } else if (sweep.log_spaced) {
      grid[i] = std::exp(std::log(sweep.from) + t * (std::log(sweep.to) - std::log(sweep.from)));
    } else {
      grid[i] = sweep.from + t * (sweep.to - sweep.from);
    }
  }
  return grid;
}

Table compute_figure(const FigureSpec& spec) {
  validate(spec.params);
  validate(spec.constraints);
  switch (spec.id) {
    case FigureId::Fig3:
      return density_sweep(spec);
    case FigureId::Fig4:
      return sigma_sweep(spec);
    case FigureId::Fig5:
      return guard_zone_sweep(spec);
    case FigureId::Fig6:
      return feasibility_boundary(spec);
    case FigureId::Fig7:
      return optimal_zone(spec);
  }
  throw DomainError("id: unknown figure");
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

void write_csv(const Table& table, std::ostream& out) {
  for (std::size_t i = 0; i < table.header.size(); ++i) {
    out << (i ? "," : "") << table.header[i];
  }
  out << '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << format_number(row[i]);
    out << '\n';
  }
}

void run_figure(const FigureSpec& spec, const std::string& output_path) {
  const Table table = compute_figure(spec);
  if (output_path.empty() || output_path == "-") {
    write_csv(table, std::cout);
    std::cout.flush();
    return;
  }
  std::ofstream file(output_path);
  if (!file) throw std::runtime_error("cannot open output file: " + output_path);
  write_csv(table, file);
  if (!file) throw std::runtime_error("failed writing output file: " + output_path);
}

}  // namespace stcap::figures
