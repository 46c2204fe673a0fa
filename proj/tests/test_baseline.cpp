#include <cmath>
#include <random>
#include <string>

#include "doctest.h"
#include "oracles.hpp"
#include "stcap/baseline.hpp"
#include "stcap/errors.hpp"

using namespace stcap;
using doctest::Approx;

namespace {

NetworkParams fig3() { return {0.01, 0.001, 4.0, 1.0}; }

struct Draw {
  NetworkParams params;
  OutageConstraints constraints;
};

Draw random_draw(std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  auto log_uniform = [&](double lo, double hi) { return lo * std::pow(hi / lo, u(gen)); };
  Draw d;
  d.params.lambda_l = log_uniform(1e-4, 1.0);
  d.params.lambda_e = log_uniform(1e-5, 0.1);
  d.params.alpha = 2.1 + 3.9 * u(gen);
  d.params.r = log_uniform(0.1, 10.0);
  d.constraints.sigma = 0.001 + 0.998 * u(gen);
  d.constraints.epsilon = 0.001 + 0.999 * u(gen);
  return d;
}

}  // namespace

TEST_SUITE("baseline") {
  TEST_CASE("connection outage") {
    CHECK(baseline::connection_outage(fig3(), 1.0) == Approx(0.048150).epsilon(1e-5));
    const double c = oracle::interference_constant(4.0);
    CHECK(baseline::connection_outage(fig3(), 1.0) ==
          Approx(1.0 - std::exp(-0.01 * oracle::kPi * c)).epsilon(1e-14));
    CHECK(baseline::connection_outage(fig3(), 0.0) == 0.0);
    CHECK_THROWS_AS(baseline::connection_outage(fig3(), -1.0), DomainError);
  }

  TEST_CASE("rates invert their outage constraints") {
    const auto p = fig3();
    CHECK(baseline::rate_t_from_sigma(p, 0.3) == Approx(5.734446930977847).epsilon(1e-13));
    CHECK(baseline::rate_e_from_epsilon(p, 0.01) == Approx(5.361892079877207).epsilon(1e-13));
    CHECK(baseline::rate_e_from_epsilon(p, 0.02) == Approx(3.4501969088030275).epsilon(1e-13));
    CHECK(baseline::rate_e_from_epsilon(p, 1.0) == 0.0);
    for (double sigma : {0.01, 0.3, 0.9}) {
      const double beta_t = std::exp2(baseline::rate_t_from_sigma(p, sigma)) - 1.0;
      CHECK(baseline::connection_outage(p, beta_t) == Approx(sigma).epsilon(1e-12));
    }
    for (double eps : {0.001, 0.01, 0.5}) {
      const double beta_e = std::exp2(baseline::rate_e_from_epsilon(p, eps)) - 1.0;
      CHECK(baseline::secrecy_outage_bounds(p, beta_e).upper == Approx(eps).epsilon(1e-12));
    }
    CHECK_THROWS_AS(baseline::rate_e_from_epsilon(p, 1e-13), NumericError);
    NetworkParams none = p;
    none.lambda_e = 0.0;
    CHECK(baseline::rate_e_from_epsilon(none, 0.01) == 0.0);
  }

  TEST_CASE("secrecy outage bounds") {
    const auto b = baseline::secrecy_outage_bounds(fig3(), 40.125);
    CHECK(b.upper == Approx(0.010001).epsilon(2e-6));
    CHECK(b.lower == Approx(0.009949).epsilon(2e-6));
    const auto zero = baseline::secrecy_outage_bounds(fig3(), 0.0);
    CHECK(zero.lower == 1.0);
    CHECK(zero.upper == 1.0);
    NetworkParams none = fig3();
    none.lambda_e = 0.0;
    CHECK(baseline::secrecy_outage_bounds(none, 5.0).upper == 0.0);
    std::mt19937_64 gen(7);
    for (int i = 0; i < 1000; ++i) {
      const auto d = random_draw(gen);
      const double beta = std::exp(std::uniform_real_distribution<double>(-10.0, 10.0)(gen));
      const auto bb = baseline::secrecy_outage_bounds(d.params, beta);
      CHECK(bb.lower <= bb.upper);
    }
  }

  TEST_CASE("capacity values") {
    const auto p = fig3();
    const double t01 = baseline::capacity(p, {0.3, 0.01}).tau;
    const double t02 = baseline::capacity(p, {0.3, 0.02}).tau;
    CHECK(t01 == Approx(0.0026078839577).epsilon(1e-11));
    CHECK(t02 == Approx(0.0159897501552).epsilon(1e-11));
    CHECK(1.0 - t01 / t02 == Approx(0.8369).epsilon(1e-4));
    CHECK(baseline::capacity(p, {0.3, 1.0}).tau == Approx(0.0401411285168).epsilon(1e-11));
    const auto infeasible = baseline::capacity(p, {0.01, 0.01});
    CHECK_FALSE(infeasible.feasible);
    CHECK(infeasible.tau == 0.0);
    CHECK(infeasible.rates.rate_s < 0.0);
  }

  TEST_CASE("capacity agrees with a first-principles oracle") {
    std::mt19937_64 gen(11);
    for (int i = 0; i < 300; ++i) {
      const auto d = random_draw(gen);
      const double expected = oracle::baseline_tau(d.params.lambda_l, d.params.lambda_e, d.params.alpha,
                                                   d.params.r, d.constraints.sigma, d.constraints.epsilon);
      const double got = baseline::capacity(d.params, d.constraints).tau;
      CAPTURE(i);
      CHECK(got == Approx(expected).epsilon(1e-9).scale(1e-12));
    }
  }

  TEST_CASE("positivity matches the sign of the secrecy rate") {
    std::mt19937_64 gen(20240601);
    int counterexamples = 0;
    for (int i = 0; i < 10000; ++i) {
      const auto d = random_draw(gen);
      const bool pos = baseline::positivity(d.params, d.constraints);
      const bool rate = baseline::capacity(d.params, d.constraints).rates.rate_s > 0.0;
      if (pos != rate) ++counterexamples;
    }
    CHECK(counterexamples == 0);
  }

  TEST_CASE("feasible sigma range is the positivity boundary") {
    const auto p = fig3();
    for (double eps : {0.01, 0.05, 0.5}) {
      const double lo = baseline::feasible_sigma_range(p, eps).lo;
      CHECK_FALSE(baseline::positivity(p, {lo * (1.0 - 1e-9), eps}));
      CHECK(baseline::positivity(p, {lo * (1.0 + 1e-9), eps}));
    }
    CHECK(baseline::feasible_sigma_range(p, 1.0).lo == 0.0);
  }

  TEST_CASE("closed-form optima") {
    const auto p = fig3();
    CHECK(baseline::optimal_lambda_asymptotic(p, 0.01) == Approx(0.063343).epsilon(1e-5));
    const double eps[] = {0.05, 0.02, 0.01};
    const double kappa[] = {12.7139, 6.1295, 3.1600};
    const double sigma[] = {0.40913, 0.49945, 0.60496};
    for (int i = 0; i < 3; ++i) {
      const auto s = baseline::optimal_sigma_sparse(p, eps[i]);
      CHECK(s.kappa == Approx(kappa[i]).epsilon(1e-4));
      CHECK(s.sigma_opt == Approx(sigma[i]).epsilon(1e-4));
      CHECK(s.sigma_opt == Approx(1.0 - std::exp(-1.0 / oracle::lambert_w0(s.kappa))).epsilon(1e-13));
      CHECK_FALSE(s.outside_sparse_regime);
    }
    NetworkParams dense = p;
    dense.lambda_l = 0.05;
    CHECK(baseline::optimal_sigma_sparse(dense, 0.01).outside_sparse_regime);
  }

  TEST_CASE("invalid parameters name the field") {
    NetworkParams p = fig3();
    p.alpha = 2.0;
    try {
      baseline::capacity(p, {0.3, 0.01});
      FAIL("expected DomainError");
    } catch (const DomainError& e) {
      CHECK(std::string(e.what()).find("alpha") != std::string::npos);
    }
    CHECK_THROWS_AS(baseline::capacity(fig3(), {1.0, 0.01}), DomainError);
    CHECK_THROWS_AS(baseline::capacity(fig3(), {0.3, 0.0}), DomainError);
    NetworkParams bad = fig3();
    bad.lambda_l = 0.0;
    CHECK_THROWS_AS(baseline::capacity(bad, {0.3, 0.01}), DomainError);
  }
}
