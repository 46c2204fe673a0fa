#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>

#include "doctest.h"
#include "stcap/baseline.hpp"
#include "stcap/errors.hpp"
#include "stcap/figures.hpp"
#include "stcap/validation.hpp"

using namespace stcap;
using doctest::Approx;

namespace {

std::size_t column(const figures::Table& t, const std::string& name) {
  const auto it = std::find(t.header.begin(), t.header.end(), name);
  REQUIRE(it != t.header.end());
  return static_cast<std::size_t>(it - t.header.begin());
}

}  // namespace

TEST_SUITE("figures") {
  TEST_CASE("sweep grids") {
    const auto lin = figures::sweep_grid({0.01, 0.99, 64, false});
    CHECK(lin.size() == 64);
    CHECK(lin.front() == 0.01);
    CHECK(lin.back() == 0.99);
    const auto lg = figures::sweep_grid({1e-3, 0.1, 3, true});
    CHECK(lg[1] == Approx(1e-2).epsilon(1e-14));
    CHECK_THROWS_AS(figures::sweep_grid({0.0, 1.0, 8, true}), DomainError);
    CHECK_THROWS_AS(figures::sweep_grid({0.0, 1.0, 1, false}), DomainError);
  }

  TEST_CASE("figure 3: density sweep") {
    auto spec = figures::default_spec(figures::FigureId::Fig3);
    CHECK(spec.sweep.log_spaced);
    CHECK(spec.constraints.sigma == 0.3);
    CHECK(spec.params.lambda_e == 0.001);
    spec.sweep = {0.01, 0.2, 2, true};
    const auto t = figures::compute_figure(spec);
    CHECK(t.header.front() == "lambda_l");
    CHECK(t.rows[0][column(t, "tau_eps_1")] == Approx(0.0401).epsilon(1e-4));
    CHECK(t.rows[0][column(t, "tau_eps_0.01")] == Approx(0.0026078839577).epsilon(1e-12));
  }

  TEST_CASE("figure 4: optimum near 0.6 for the strictest curve") {
    const auto t = figures::compute_figure(figures::default_spec(figures::FigureId::Fig4));
    const auto col = column(t, "tau_eps_0.01");
    const auto best = std::max_element(t.rows.begin(), t.rows.end(),
                                       [&](const auto& a, const auto& b) { return a[col] < b[col]; });
    CHECK((*best)[0] == Approx(0.6).epsilon(0.02));
    for (const auto& row : t.rows) {
      for (double v : row) {
        CHECK(std::isfinite(v));
        CHECK(v >= 0.0);
      }
      const double lo = baseline::feasible_sigma_range(figures::default_spec(figures::FigureId::Fig4).params, 0.01).lo;
      if (row[0] <= lo) CHECK(row[col] == 0.0);
    }
  }

  TEST_CASE("figure 5: guard zone curves") {
    auto spec = figures::default_spec(figures::FigureId::Fig5);
    spec.sweep.points = 4;
    const auto t = figures::compute_figure(spec);
    CHECK(t.header.size() == 6);
    CHECK(t.rows[0][0] == 0.01);
    CHECK(t.rows[0][column(t, "tau_coop_d3")] == Approx(0.021).epsilon(0.001 / 0.021));
    CHECK(t.rows[0][column(t, "tau_d0")] == Approx(0.0026078839577).epsilon(1e-12));
    CHECK(t.rows[0][column(t, "tau_noncoop_d3")] < t.rows[0][column(t, "tau_coop_d3")]);
  }

  TEST_CASE("figure 6: feasibility boundary shrinks with D") {
    const auto t = figures::compute_figure(figures::default_spec(figures::FigureId::Fig6));
    const auto p = figures::default_spec(figures::FigureId::Fig6).params;
    for (const auto& row : t.rows) {
      CHECK(row[1] == Approx(baseline::feasible_sigma_range(p, row[0]).lo).epsilon(1e-14));
      CHECK(row[2] < row[1]);
      CHECK(row[3] < row[2]);
    }
  }

  TEST_CASE("figure 7: optimal radius") {
    auto spec = figures::default_spec(figures::FigureId::Fig7);
    spec.sweep = {0.01, 0.5, 5, false};
    const auto t = figures::compute_figure(spec);
    CHECK(t.header.size() == 5);
    for (const auto& row : t.rows) {
      for (std::size_t i = 1; i < row.size(); ++i) {
        CHECK(row[i] >= 0.0);
        CHECK(row[i] <= 10.0);
      }
    }
    CHECK(t.rows.front()[column(t, "d_opt_sigma_0.3_lambda_0.05")] > 0.0);
    CHECK(t.rows.back()[column(t, "d_opt_sigma_0.3_lambda_0.05")] == 0.0);
  }

  TEST_CASE("csv output") {
    figures::Table t{{"x", "y"}, {{0.1, 1.0 / 3.0}, {2e-7, 12345678.9}}};
    std::ostringstream out;
    figures::write_csv(t, out);
    CHECK(out.str() == "x,y\n0.1,0.333333333333\n2e-07,12345678.9\n");

    auto spec = figures::default_spec(figures::FigureId::Fig5);
    spec.sweep.points = 3;
    std::ostringstream a, b;
    figures::write_csv(figures::compute_figure(spec), a);
    figures::write_csv(figures::compute_figure(spec), b);
    CHECK(a.str() == b.str());
  }

  TEST_CASE("figure ids and controlled fields") {
    CHECK_THROWS_AS(figures::figure_from_int(2), DomainError);
    CHECK(figures::figure_from_int(6) == figures::FigureId::Fig6);
    const auto fields = figures::controlled_fields(figures::FigureId::Fig3);
    CHECK(std::find(fields.begin(), fields.end(), "lambda_l") != fields.end());
    CHECK(figures::sweep_variable(figures::FigureId::Fig4) == "sigma");
  }

  TEST_CASE("validation report") {
    validation::ValidateOptions o;
    o.mc.trials = 20000;
    o.mc.threads = 1;
    o.beta_t = 0.0;
    auto r = validation::run_validate(o);
    CHECK(r.checks[0].analytic == 0.0);
    CHECK(r.checks[0].estimate.p_hat == 0.0);
    CHECK(r.passed());

    o.beta_t.reset();
    o.analytic_offset = 0.05;
    r = validation::run_validate(o);
    CHECK_FALSE(r.passed());
    std::ostringstream out;
    validation::print_report(r, out);
    CHECK(out.str().find("RESULT FAIL") != std::string::npos);

    o.analytic_offset = 0.0;
    o.guard = {3.0, Protocol::NonCooperative};
    r = validation::run_validate(o);
    CHECK(r.checks[0].verdict == validation::Verdict::Info);
  }
}
