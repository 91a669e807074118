#include "twomeans/mc_validate.hpp"

#include <algorithm>
#include <cmath>
#include <thread>
#include <vector>

#include "twomeans/intervals.hpp"
#include "twomeans/specfun.hpp"
#include "checks.hpp"

namespace twomeans {

namespace {

// splitmix64 output function applied to a pure counter
std::uint64_t counter_mix(std::uint64_t seed, std::uint64_t n) {
    std::uint64_t z = seed + (n + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

double to_unit_open(std::uint64_t bits) {
    // 53-bit mantissa, offset half a step to stay strictly inside (0, 1)
    return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

void validate_config(const McConfig& config) {
    if (config.n_reps < 1)
        throw std::domain_error("McConfig: n_reps must be >= 1");
    detail::require_alpha(config.alpha);
    detail::require_nonneg(config.holder_bound, "McConfig: holder_bound");
    if (std::fabs(config.theta_true.theta1 - config.theta_true.theta2) >
        config.holder_bound)
        throw std::domain_error(
            "McConfig: theta_true violates |theta1 - theta2| <= holder_bound");
    if (config.lambda) detail::require_nonneg(*config.lambda, "McConfig: lambda");
}

// fixed weight if given, otherwise the method's tuned weight
double resolve_lambda(const McConfig& config) {
    if (config.method == Method::standard) return 0.0;
    if (config.lambda) return *config.lambda;
    return config.method == Method::partial_c1
               ? lambda1_star(config.alpha, config.holder_bound)
               : lambda2_star(config.alpha, config.holder_bound).lambda_star;
}

// counts hits of `event` over replication chunks; order-independent sums
template <typename Event>
std::int64_t count_parallel(std::int64_t n_reps, int n_threads, const Event& event) {
    if (n_threads < 1)
        throw std::invalid_argument("n_threads must be >= 1");
    if (n_threads == 1) {
        std::int64_t hits = 0;
        for (std::int64_t i = 0; i < n_reps; ++i) hits += event(i) ? 1 : 0;
        return hits;
    }
    std::vector<std::int64_t> partial(static_cast<std::size_t>(n_threads), 0);
    std::vector<std::thread> workers;
    workers.reserve(static_cast<std::size_t>(n_threads));
    const std::int64_t chunk = (n_reps + n_threads - 1) / n_threads;
    for (int t = 0; t < n_threads; ++t) {
        workers.emplace_back([&, t] {
            const std::int64_t begin = t * chunk;
            const std::int64_t end = std::min(n_reps, begin + chunk);
            std::int64_t hits = 0;
            for (std::int64_t i = begin; i < end; ++i) hits += event(i) ? 1 : 0;
            partial[static_cast<std::size_t>(t)] = hits;
        });
    }
    for (auto& w : workers) w.join();
    std::int64_t total = 0;
    for (std::int64_t h : partial) total += h;
    return total;
}

CoverageReport make_report(const McConfig& config, std::int64_t covered,
                           double mean_length) {
    const double n = static_cast<double>(config.n_reps);
    const double coverage = static_cast<double>(covered) / n;
    const double exceedance = static_cast<double>(config.n_reps - covered) / n;
    return {config.n_reps,
            coverage,
            exceedance,
            std::sqrt(coverage * (1.0 - coverage) / n),
            mean_length,
            config.seed};
}

}  // namespace

double substream_normal(std::uint64_t seed, std::int64_t rep, int k) {
    const std::uint64_t n = 2 * static_cast<std::uint64_t>(rep) + static_cast<std::uint64_t>(k);
    return norm_quantile(to_unit_open(counter_mix(seed, n)));
}

CoverageReport simulate_coverage(const McConfig& config, int n_threads) {
    validate_config(config);
    const double lambda = resolve_lambda(config);
    const double theta1 = config.theta_true.theta1;
    const double theta2 = config.theta_true.theta2;

    // lengths are data-free, so the half-width is fixed across replications
    double half_width;
    if (config.method == Method::standard) {
        half_width = norm_quantile(1.0 - 0.5 * config.alpha);
    } else if (config.method == Method::partial_c1) {
        half_width = 0.5 * len_l1(lambda, config.alpha, config.holder_bound);
    } else {
        half_width = 0.5 * len_l2(lambda, config.alpha, config.holder_bound);
    }

    const std::int64_t covered = count_parallel(
        config.n_reps, n_threads, [&](std::int64_t rep) {
            const double y1 = theta1 + substream_normal(config.seed, rep, 0);
            const double y2 = theta2 + substream_normal(config.seed, rep, 1);
            const double center =
                config.method == Method::standard
                    ? y2
                    : (lambda * y1 + (1.0 + lambda) * y2) / (1.0 + 2.0 * lambda);
            return std::fabs(theta2 - center) <= half_width;
        });
    return make_report(config, covered, 2.0 * half_width);
}

CoverageReport simulate_contour_validity(const McConfig& config,
                                         bool theta2_component_only, int n_threads) {
    validate_config(config);
    const double lambda = resolve_lambda(config);
    const MeanPair theta = config.theta_true;
    const double B = config.holder_bound;

    const std::int64_t not_exceeded = count_parallel(
        config.n_reps, n_threads, [&](std::int64_t rep) {
            const Observation y(theta.theta1 + substream_normal(config.seed, rep, 0),
                                theta.theta2 + substream_normal(config.seed, rep, 1));
            double value;
            switch (config.method) {
                case Method::standard:
                    value = contour_standard(y.y2, theta.theta2);
                    break;
                case Method::partial_c1:
                    value = theta2_component_only
                                ? contour_marginal_t1(y, theta.theta2, lambda, B)
                                : contour_joint_t1(y, theta, lambda);
                    break;
                default:
                    value = theta2_component_only
                                ? contour_marginal_t2(y, theta.theta2, lambda, B)
                                : contour_joint_t2(y, theta, lambda);
            }
            return value > config.alpha;
        });
    return make_report(config, not_exceeded, 0.0);
}

}  // namespace twomeans
