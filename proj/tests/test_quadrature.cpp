#include <cmath>
#include <limits>
#include <numbers>

#include "doctest.h"
#include "stcap/errors.hpp"
#include "stcap/quadrature.hpp"

using stcap::quad::integrate;
using doctest::Approx;

TEST_SUITE("quadrature") {
  TEST_CASE("smooth integrands") {
    const auto r = integrate([](double x) { return std::sin(x); }, 0.0, std::numbers::pi);
    CHECK(r.value == Approx(2.0).epsilon(1e-13));
    CHECK(r.abs_error <= 1e-10);
    const auto g = integrate([](double x) { return std::exp(-x * x); }, -8.0, 8.0);
    CHECK(g.value == Approx(std::sqrt(std::numbers::pi)).epsilon(1e-13));
  }

  TEST_CASE("endpoint singularity needs subdivision") {
    const auto r = integrate([](double x) { return 1.0 / std::sqrt(x); }, 0.0, 1.0);
    CHECK(r.value == Approx(2.0).epsilon(1e-9));
    CHECK(r.intervals > 1);
  }

  TEST_CASE("failures are reported") {
    stcap::quad::QuadratureOptions tight;
    tight.max_intervals = 3;
    tight.abs_tolerance = 1e-15;
    CHECK_THROWS_AS(integrate([](double x) { return std::sin(1.0 / (x + 1e-3)); }, 0.0, 1.0, tight),
                    stcap::QuadratureError);
    CHECK_THROWS_AS(integrate([](double) { return std::numeric_limits<double>::quiet_NaN(); }, 0.0, 1.0),
                    stcap::QuadratureError);
  }
}
