#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "oracles.hpp"
#include "twomeans/intervals.hpp"
#include "twomeans/optimize.hpp"

using namespace twomeans;

TEST_CASE("quadratic minimum") {
    BracketConfig config;
    const auto result = minimize_scalar([](double x) { return (x - 2.0) * (x - 2.0); }, config);
    CHECK(std::fabs(result.argmin - 2.0) <= 1e-8);
    CHECK(result.min <= 1e-15);
    CHECK(result.evaluations > 0);
}

TEST_CASE("piecewise-linear kink") {
    BracketConfig config;
    const auto result =
        minimize_scalar([](double x) { return std::fabs(x - 1.0) + 0.1 * x; }, config);
    CHECK(std::fabs(result.argmin - 1.0) <= 1e-6);
}

TEST_CASE("interval-length objective matches a grid scan") {
    BracketConfig config;
    auto f = [](double lambda) { return len_l2(lambda, 0.05, 1.0); };
    const auto result = minimize_scalar(f, config);
    // coarse scan, then a fine pass around the coarse winner
    const auto coarse = oracles::grid_argmin(f, 0.0, 10.0, 1000);
    const auto fine = oracles::grid_argmin(f, coarse.first - 0.05, coarse.first + 0.05, 1000);
    CHECK(std::fabs(result.argmin - fine.first) <= 1e-4);
    CHECK(result.min <= fine.second + 1e-12);
}

TEST_CASE("returned minimum dominates the origin and equals f(argmin)") {
    BracketConfig config;
    auto f = [](double x) { return std::cos(x) + 0.01 * x; };
    const auto result = minimize_scalar(f, config);
    CHECK(result.min <= f(0.0));
    CHECK(result.min == f(result.argmin));
}

TEST_CASE("monotone-decreasing objective raises bracket_error") {
    BracketConfig config;
    config.max_doublings = 16;
    CHECK_THROWS_AS(minimize_scalar([](double x) { return -x; }, config), bracket_error);
}

TEST_CASE("config validation") {
    BracketConfig bad;
    bad.initial_upper = 0.0;
    CHECK_THROWS_AS(minimize_scalar([](double x) { return x * x; }, bad), std::domain_error);
    bad = BracketConfig{};
    bad.max_doublings = 0;
    CHECK_THROWS_AS(minimize_scalar([](double x) { return x * x; }, bad), std::domain_error);
    bad = BracketConfig{};
    bad.tolerance = -1.0;
    CHECK_THROWS_AS(minimize_scalar([](double x) { return x * x; }, bad), std::domain_error);
}
