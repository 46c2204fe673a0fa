#include <cmath>
#include <limits>

#include "doctest.h"
#include "stcap/baseline.hpp"
#include "stcap/design_query.hpp"
#include "stcap/errors.hpp"
#include "stcap/optimize.hpp"

using namespace stcap;
using doctest::Approx;

TEST_SUITE("optimize") {
  TEST_CASE("maximize_1d finds interior and global maxima") {
    const auto r = opt::maximize_1d([](double x) { return -(x - 0.3) * (x - 0.3); }, {0.0, 1.0}, 1e-10);
    CHECK(r.argmax == Approx(0.3).epsilon(1e-5));
    // Two bumps; the taller one is narrow and sits far from the bracket middle.
    auto bumps = [](double x) {
      return std::exp(-50.0 * (x - 0.2) * (x - 0.2)) + 1.5 * std::exp(-2000.0 * (x - 0.83) * (x - 0.83));
    };
    const auto g = opt::maximize_1d(bumps, {0.0, 1.0}, 1e-10, 200);
    CHECK(g.argmax == Approx(0.83).epsilon(1e-6));
    CHECK(g.evaluations > 200);
  }

  TEST_CASE("ties keep the earliest point") {
    CHECK(opt::maximize_1d([](double) { return 0.0; }, {2.0, 5.0}, 1e-6).argmax == 2.0);
    CHECK(opt::maximize_1d([](double x) { return -x; }, {0.0, 10.0}, 1e-9).argmax == 0.0);
    CHECK(opt::maximize_1d([](double x) { return x; }, {0.0, 10.0}, 1e-9).argmax == 10.0);
  }

  TEST_CASE("non-finite objective is reported with its location") {
    auto f = [](double x) { return x > 0.5 ? std::numeric_limits<double>::quiet_NaN() : x; };
    try {
      opt::maximize_1d(f, {0.0, 1.0}, 1e-6);
      FAIL("expected NonFiniteObjective");
    } catch (const NonFiniteObjective& e) {
      CHECK(e.point() > 0.5);
    }
    CHECK_THROWS_AS(opt::maximize_1d(f, {1.0, 0.0}, 1e-6), DomainError);
  }

  TEST_CASE("bisection") {
    CHECK(opt::bisect_decreasing_log([](double x) { return 2.0 - x; }, 1e-3, 1e3) ==
          Approx(2.0).epsilon(1e-13));
    CHECK(opt::bisect_increasing([](double x) { return x * x * x - 0.125; }, 0.0, 1.0) ==
          Approx(0.5).epsilon(1e-14));
  }

  TEST_CASE("numeric optimum of tau over the density") {
    const NetworkParams p{0.01, 0.001, 4.0, 1.0};
    const double eps[] = {0.05, 0.02, 0.01};
    const double expected[] = {0.04013, 0.05067, 0.06776};
    for (int i = 0; i < 3; ++i) {
      design::Query q{design::Target::LambdaL, p, {0.3, eps[i]}, {}};
      const auto a = design::run_optimize(q);
      CHECK(a.argmax == Approx(expected[i]).epsilon(1e-3));
      REQUIRE(a.comparator);
      CHECK(a.comparator->value == Approx(baseline::optimal_lambda_asymptotic(p, eps[i])));
    }
  }

  TEST_CASE("numeric optimum of tau over sigma") {
    const NetworkParams p{0.01, 0.001, 4.0, 1.0};
    const double eps[] = {0.05, 0.02, 0.01};
    const double expected[] = {0.40685, 0.49804, 0.60418};
    for (int i = 0; i < 3; ++i) {
      design::Query q{design::Target::Sigma, p, {0.3, eps[i]}, {}};
      const auto a = design::run_optimize(q);
      CHECK(a.argmax == Approx(expected[i]).epsilon(1e-3));
      CHECK(a.bracket.lo == Approx(baseline::feasible_sigma_range(p, eps[i]).lo));
      REQUIRE(a.comparator);
      CHECK(std::abs(a.comparator->value - a.argmax) < 0.05);
    }
  }

  TEST_CASE("guard zone optimum collapses to zero for loose secrecy") {
    design::Query q{design::Target::GuardD, {0.05, 0.001, 4.0, 1.0}, {0.3, 0.5}, {}};
    CHECK(design::run_optimize(q).argmax == 0.0);
    q.constraints.epsilon = 0.01;
    CHECK(design::run_optimize(q).argmax > 0.0);
  }

  TEST_CASE("infeasible queries and bad targets") {
    design::Query q{design::Target::LambdaL, {0.01, 0.001, 4.0, 1.0}, {0.01, 0.01}, {}};
    CHECK_THROWS_AS(design::run_optimize(q), design::Infeasible);
    CHECK_THROWS_AS(design::parse_target("radius"), DomainError);
    CHECK(design::parse_target("guard_d") == design::Target::GuardD);
  }
}
