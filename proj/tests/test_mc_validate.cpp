#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "twomeans/intervals.hpp"
#include "twomeans/mc_validate.hpp"
#include "twomeans/specfun.hpp"

using namespace twomeans;

namespace {

McConfig base_config() {
    McConfig config;
    config.n_reps = 100000;
    config.seed = 20240;
    config.alpha = 0.05;
    config.holder_bound = 1.0;
    config.theta_true = MeanPair(0.5, 0.5);
    config.method = Method::standard;
    return config;
}

bool reports_equal(const CoverageReport& a, const CoverageReport& b) {
    return a.n_reps == b.n_reps && a.empirical_coverage == b.empirical_coverage &&
           a.empirical_alpha_exceedance == b.empirical_alpha_exceedance &&
           a.std_error == b.std_error && a.mean_length == b.mean_length &&
           a.seed == b.seed;
}

double band(const McConfig& config) {
    return 3.0 * std::sqrt(config.alpha * (1.0 - config.alpha) /
                           static_cast<double>(config.n_reps));
}

}  // namespace

TEST_CASE("substream draws depend only on (seed, rep, k)") {
    CHECK(substream_normal(7, 11, 0) == substream_normal(7, 11, 0));
    CHECK(substream_normal(7, 11, 0) != substream_normal(7, 11, 1));
    CHECK(substream_normal(7, 11, 0) != substream_normal(7, 12, 0));
    CHECK(substream_normal(7, 11, 0) != substream_normal(8, 11, 0));
}

TEST_CASE("coverage reports are deterministic across runs and thread counts") {
    McConfig config = base_config();
    config.method = Method::regularized_c2;
    config.lambda = 0.9;
    const CoverageReport once = simulate_coverage(config);
    const CoverageReport twice = simulate_coverage(config);
    CHECK(reports_equal(once, twice));
    for (int threads : {2, 3, 7})
        CHECK(reports_equal(once, simulate_coverage(config, threads)));

    const CoverageReport v_once = simulate_contour_validity(config, true);
    for (int threads : {2, 5})
        CHECK(reports_equal(v_once, simulate_contour_validity(config, true, threads)));
}

TEST_CASE("report bookkeeping is consistent") {
    McConfig config = base_config();
    config.n_reps = 20000;
    const CoverageReport report = simulate_coverage(config);
    CHECK(report.n_reps == config.n_reps);
    CHECK(report.seed == config.seed);
    CHECK(std::fabs(report.empirical_coverage + report.empirical_alpha_exceedance - 1.0) <=
          1e-15);
    const double p = report.empirical_coverage;
    CHECK(std::fabs(report.std_error - std::sqrt(p * (1.0 - p) / 20000.0)) <= 1e-15);
    CHECK(report.mean_length ==
          ci_standard(0.0, config.alpha).length());
}

TEST_CASE("standard interval covers at its exact nominal rate") {
    McConfig config = base_config();
    config.theta_true = MeanPair(0.3, 0.1);
    config.holder_bound = 0.5;
    const CoverageReport report = simulate_coverage(config);
    CHECK(report.empirical_coverage >= 0.95 - band(config));
    CHECK(report.empirical_coverage <= 0.95 + band(config));
}

TEST_CASE("tuned regularized interval is valid at interior and boundary truths") {
    McConfig config = base_config();
    config.method = Method::regularized_c2;

    config.theta_true = MeanPair(0.5, 0.5);
    CoverageReport report = simulate_coverage(config);
    CHECK(report.empirical_coverage >= 0.95 - band(config));

    config.theta_true = MeanPair(1.5, 0.5);  // |theta1 - theta2| = B
    report = simulate_coverage(config);
    CHECK(report.empirical_coverage >= 0.95 - band(config));
}

TEST_CASE("tuned partial interval is valid on the same truths") {
    McConfig config = base_config();
    config.method = Method::partial_c1;
    for (double gap : {0.0, 1.0}) {
        config.theta_true = MeanPair(0.5 + gap, 0.5);
        const CoverageReport report = simulate_coverage(config);
        CHECK(report.empirical_coverage >= 0.95 - band(config));
    }
}

TEST_CASE("tuned mean lengths order: regularized <= partial <= standard") {
    McConfig config = base_config();
    config.holder_bound = 0.5;  // below the normal quantile, so tuning bites
    config.theta_true = MeanPair(0.2, 0.2);

    const CoverageReport standard = simulate_coverage(config);
    config.method = Method::partial_c1;
    const CoverageReport partial = simulate_coverage(config);
    config.method = Method::regularized_c2;
    const CoverageReport regularized = simulate_coverage(config);

    CHECK(regularized.mean_length <= partial.mean_length);
    CHECK(partial.mean_length <= standard.mean_length);
    CHECK(regularized.mean_length < standard.mean_length);
}

TEST_CASE("joint centered contour has uniform exceedance") {
    McConfig config = base_config();
    config.method = Method::partial_c1;
    config.lambda = 1.0;
    config.theta_true = MeanPair(0.9, 0.5);
    for (double alpha : {0.01, 0.05, 0.1, 0.2, 0.5}) {
        config.alpha = alpha;
        const CoverageReport report = simulate_contour_validity(config, false);
        CHECK(std::fabs(report.empirical_alpha_exceedance - alpha) <= band(config));
        CHECK(report.mean_length == 0.0);
    }
}

TEST_CASE("marginal uncentered contour: conservative inside, tight at the boundary") {
    McConfig config = base_config();
    config.method = Method::regularized_c2;
    config.lambda = 1.0;

    config.theta_true = MeanPair(0.5, 0.5);  // strictly interior
    CoverageReport report = simulate_contour_validity(config, true);
    CHECK(report.empirical_alpha_exceedance <= config.alpha - band(config));

    config.theta_true = MeanPair(-0.5, 0.5);  // |theta1 - theta2| = B
    report = simulate_contour_validity(config, true);
    CHECK(std::fabs(report.empirical_alpha_exceedance - config.alpha) <= band(config));

    // the validity inequality across the alpha grid, interior truth
    config.theta_true = MeanPair(0.8, 0.5);
    for (double alpha : {0.01, 0.05, 0.1, 0.2, 0.5}) {
        config.alpha = alpha;
        report = simulate_contour_validity(config, true);
        CHECK(report.empirical_alpha_exceedance <= alpha + band(config));
    }
}

TEST_CASE("config validation") {
    McConfig config = base_config();
    config.theta_true = MeanPair(2.0, 0.0);  // violates the constraint
    CHECK_THROWS_AS(simulate_coverage(config), std::domain_error);

    config = base_config();
    config.n_reps = 0;
    CHECK_THROWS_AS(simulate_coverage(config), std::domain_error);

    config = base_config();
    config.lambda = -1.0;
    CHECK_THROWS_AS(simulate_coverage(config), std::domain_error);

    config = base_config();
    CHECK_THROWS_AS(simulate_coverage(config, 0), std::invalid_argument);
}
