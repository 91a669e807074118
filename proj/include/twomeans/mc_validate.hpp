#pragma once

#include <cstdint>
#include <optional>

#include "twomeans/im_core.hpp"

namespace twomeans {

enum class Method { standard, partial_c1, regularized_c2 };

/// One Monte Carlo experiment. theta_true must satisfy the constraint
/// |theta1 - theta2| <= holder_bound.
struct McConfig {
    std::int64_t n_reps = 1;
    std::uint64_t seed = 0;
    double alpha = 0.05;
    double holder_bound = 1.0;
    MeanPair theta_true{0.0, 0.0};
    Method method = Method::standard;
    std::optional<double> lambda;  // engaged: fixed weight; empty: tuned
};

struct CoverageReport {
    std::int64_t n_reps;
    double empirical_coverage;
    double empirical_alpha_exceedance;
    double std_error;  // sqrt(p(1-p)/n) at the empirical rate
    double mean_length;
    std::uint64_t seed;
};

/// Standard-normal draw k of replication rep under the given seed. Pure
/// counter-based substream: the value depends only on (seed, rep, k), so
/// aggregate results never depend on execution order or thread count.
double substream_normal(std::uint64_t seed, std::int64_t rep, int k);

/// Draws y per replication and counts coverage of theta2 by the configured
/// method's interval. Tuned weights are resolved once up front (interval
/// lengths are data-free). Identical configs give bit-identical reports for
/// any n_threads.
CoverageReport simulate_coverage(const McConfig& config, int n_threads = 1);

/// Empirical rate of {contour value at the true parameter <= alpha}.
/// theta2_component_only selects the marginal contour at the true theta2
/// rather than the joint contour at the true pair. mean_length is 0 here.
CoverageReport simulate_contour_validity(const McConfig& config,
                                         bool theta2_component_only,
                                         int n_threads = 1);

}  // namespace twomeans
