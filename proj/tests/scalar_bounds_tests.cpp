#include <doctest.h>

#include <cmath>
#include <random>

#include "entbounds/scalar_bounds.hpp"

using namespace entbounds;

TEST_CASE("lower chain collapses to one at x = 0") {
    const auto b = power_lower_chain({0.0, 2.0, 4.5, 1.0});
    for (double value : b) CHECK(value == 1.0);
}

TEST_CASE("lower chain is exact at x = 1 for mu = 1") {
    const auto b = power_lower_chain({1.0, 1.0, 1.0, 1.0});
    for (double value : b) CHECK(value == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("lower chain first rung touches the power at the endpoint") {
    // k = 2, mu = 2: the strongest rung equals (3/2)^2 at x = 1/k.
    const auto b = power_lower_chain({0.5, 2.0, 2.0, 1.0});
    CHECK(b[0] == doctest::Approx(2.25).epsilon(1e-15));
}

TEST_CASE("upper chain collapses to one at x = 0 and v = 0") {
    const auto at_zero = power_upper_chain({0.0, 2.0, 3.0, 0.7});
    for (double value : at_zero) CHECK(value == 1.0);
    const auto zero_power = power_upper_chain({0.4, 2.0, 3.0, 0.0});
    for (double value : zero_power) CHECK(value == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("upper chain first rung is exact for v = 1 at k = 1") {
    const auto u = power_upper_chain({0.5, 1.0, 3.0, 1.0});
    CHECK(u[0] == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("linear-tail lower bound special values") {
    CHECK(power_lower_linear({0.0, 2.0, 3.0, 1.0}) == 1.0);
    // k = 1, mu = 2 completes the square
    CHECK(power_lower_linear({0.5, 1.0, 2.0, 1.0}) == doctest::Approx(2.25).epsilon(1e-15));
    // endpoint equality at x = 1/k
    const double mu = 2.5;
    const double k = 2.0;
    CHECK(power_lower_linear({1.0 / k, k, mu, 1.0}) ==
          doctest::Approx(std::pow(1.5, mu)).epsilon(1e-15));
}

TEST_CASE("unit quadratic lower bound is the cube for mu = 3") {
    for (double x : {0.0, 0.2, 0.7, 1.0}) {
        CHECK(power_lower_quadratic_unit(x, 3.0) ==
              doctest::Approx(std::pow(1.0 + x, 3.0)).epsilon(1e-15));
    }
    // x = 1, mu = 4 collapses onto 2^4
    CHECK(power_lower_quadratic_unit(1.0, 4.0) == doctest::Approx(16.0).epsilon(1e-15));
    // direct evaluation at an interior point
    CHECK(power_lower_quadratic_unit(0.5, 4.0) == doctest::Approx(4.0625).epsilon(1e-15));
    CHECK(power_lower_quadratic_unit(0.5, 4.0) <= std::pow(1.5, 4.0));
}

TEST_CASE("general quadratic lower bound reduces to the unit form at k = 1") {
    for (double x : {0.0, 0.3, 0.66, 1.0}) {
        for (double mu : {3.0, 3.7, 5.5, 8.0}) {
            CHECK(std::abs(power_lower_quadratic({x, 1.0, mu, 1.0}) -
                           power_lower_quadratic_unit(x, mu)) < 1e-13);
        }
    }
}

TEST_CASE("quadratic lower bound endpoint equality") {
    const double k = 3.0;
    const double mu = 3.7;
    CHECK(std::abs(power_lower_quadratic({1.0 / k, k, mu, 1.0}) -
                   std::pow(1.0 + 1.0 / k, mu)) < 1e-13);
    CHECK(power_lower_quadratic({0.0, k, mu, 1.0}) == 1.0);
}

TEST_CASE("unit weighted upper bound special values") {
    for (double v : {0.0, 0.25, 0.8, 1.0}) {
        CHECK(power_upper_weighted_unit(1.0, v) ==
              doctest::Approx(std::pow(2.0, v)).epsilon(1e-15));
    }
    for (double x : {0.0, 0.4, 1.0}) {
        CHECK(power_upper_weighted_unit(x, 1.0) == doctest::Approx(1.0 + x).epsilon(1e-15));
    }
}

TEST_CASE("unit weighted upper bound dominates the power at the flagged point") {
    // Independent high-precision evaluation of both sides at (0.25, 0.5):
    // 1 + 0.0625 + (sqrt(2) - 1.25) * 0.5 against 1.25^0.5.
    const double bound = power_upper_weighted_unit(0.25, 0.5);
    const double direct = 1.0 + 0.5 / 2.0 * 0.25 + (std::sqrt(2.0) - 0.25 - 1.0) * 0.5;
    CHECK(bound == doctest::Approx(direct).epsilon(1e-15));
    CHECK(bound >= std::pow(1.25, 0.5));
}

TEST_CASE("weighted upper bound endpoint and reductions") {
    const double k = 2.0;
    const double v = 0.6;
    CHECK(std::abs(power_upper_weighted({1.0 / k, k, 3.0, v}) -
                   std::pow(1.0 + 1.0 / k, v)) < 1e-14);
    for (double x : {0.1, 0.5, 1.0}) {
        CHECK(power_upper_weighted({x, 1.0, 3.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-15));
        CHECK(std::abs(power_upper_weighted({x, 1.0, 3.0, 0.37}) -
                       power_upper_weighted_unit(x, 0.37)) < 1e-13);
    }
}

TEST_CASE("lower ladder degenerate and boundary points") {
    const auto at_zero = lower_bound_ladder({0.0, 2.0, 3.0, 1.0});
    for (double value : at_zero) CHECK(value == 1.0);

    // k = 1, mu = 3, x = 1: all rungs hit 8
    const auto cube = lower_bound_ladder({1.0, 1.0, 3.0, 1.0});
    for (double value : cube) CHECK(value == doctest::Approx(8.0).epsilon(1e-15));

    // strictly descending at an interior point
    const auto interior = lower_bound_ladder({0.5, 2.0, 3.0, 1.0});
    CHECK(interior[0] > interior[1]);
    CHECK(interior[1] > interior[2]);
}

TEST_CASE("upper ladder degenerate and boundary points") {
    const auto at_zero = upper_bound_ladder({0.0, 2.0, 3.0, 0.4});
    for (double value : at_zero) CHECK(value == 1.0);

    const auto linear = upper_bound_ladder({1.0, 1.0, 3.0, 1.0});
    for (double value : linear) CHECK(value == doctest::Approx(2.0).epsilon(1e-15));

    // x = 1/k pins every rung to (1 + 1/k)^v
    const double k = 2.0;
    const double v = 0.4;
    const auto endpoint = upper_bound_ladder({1.0 / k, k, 3.0, v});
    const double want = std::pow(1.0 + 1.0 / k, v);
    for (double value : endpoint) CHECK(value == doctest::Approx(want).epsilon(1e-13));
}

TEST_CASE("domain violations are rejected") {
    CHECK_THROWS_AS(power_lower_chain({-0.1, 1.0, 3.0, 1.0}), std::domain_error);
    CHECK_THROWS_AS(power_lower_chain({0.6, 2.0, 3.0, 1.0}), std::domain_error);  // x > 1/k
    CHECK_THROWS_AS(power_lower_chain({0.1, 0.5, 3.0, 1.0}), std::domain_error);  // k < 1
    CHECK_THROWS_AS(power_lower_chain({0.1, 1.0, 0.5, 1.0}), std::domain_error);  // mu < 1
    CHECK_THROWS_AS(power_lower_linear({0.1, 1.0, 1.5, 1.0}), std::domain_error);
    CHECK_THROWS_AS(power_lower_quadratic({0.1, 1.0, 2.5, 1.0}), std::domain_error);
    CHECK_THROWS_AS(power_lower_quadratic_unit(1.2, 3.0), std::domain_error);
    CHECK_THROWS_AS(power_upper_weighted({0.1, 1.0, 3.0, 1.2}), std::domain_error);
    CHECK_THROWS_AS(power_upper_weighted_unit(0.1, -0.2), std::domain_error);
}

TEST_CASE("randomized soundness and ordering sweep") {
    std::mt19937_64 rng(314159);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int i = 0; i < 20000; ++i) {
        const double k = 1.0 + 9.0 * unit(rng);
        const double x = unit(rng) / k;
        const double mu = 3.0 + 7.0 * unit(rng);
        const double v = unit(rng);
        const double lhs_mu = std::pow(1.0 + x, mu);
        const double lhs_v = std::pow(1.0 + x, v);

        const auto lower = power_lower_chain({x, k, mu, 1.0});
        CHECK(lhs_mu - lower[0] >= -1e-11);
        CHECK(lower[0] - lower[1] >= -1e-12);
        CHECK(lower[1] - lower[2] >= -1e-12);
        CHECK(lower[2] - lower[3] >= -1e-12);

        const auto upper = power_upper_chain({x, k, mu, v});
        CHECK(upper[0] - lhs_v >= -1e-12);
        CHECK(upper[1] - upper[0] >= -1e-12);
        CHECK(upper[2] - upper[1] >= -1e-12);
        CHECK(upper[3] - upper[2] >= -1e-12);

        const auto ladder_down = lower_bound_ladder({x, k, mu, 1.0});
        CHECK(lhs_mu - ladder_down[0] >= -1e-11);
        CHECK(ladder_down[0] - ladder_down[1] >= -1e-12);
        CHECK(ladder_down[1] - ladder_down[2] >= -1e-12);

        const auto ladder_up = upper_bound_ladder({x, k, mu, v});
        CHECK(ladder_up[0] - lhs_v >= -1e-12);
        CHECK(ladder_up[1] - ladder_up[0] >= -1e-12);
        CHECK(ladder_up[2] - ladder_up[1] >= -1e-12);
    }
}
