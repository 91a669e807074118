#include "twomeans/intervals.hpp"

#include <cmath>

#include "twomeans/optimize.hpp"
#include "twomeans/specfun.hpp"
#include "checks.hpp"

namespace twomeans {

using detail::require_alpha;
using detail::require_nonneg;
using detail::weight_norm_sq;

namespace {

// shared center of the two regularized cuts
double regularized_center(const Observation& y, double lambda) {
    return (lambda * y.y1 + (1.0 + lambda) * y.y2) / (1.0 + 2.0 * lambda);
}

double partial_half_width(double lambda, double alpha, double holder_bound) {
    const double z = norm_quantile(1.0 - 0.5 * alpha);
    return (lambda * holder_bound + z * std::sqrt(weight_norm_sq(lambda))) /
           (1.0 + 2.0 * lambda);
}

double regularized_half_width(double lambda, double alpha, double holder_bound) {
    const double q = chisq1_quantile(1.0 - alpha, noncentrality_g(lambda, holder_bound));
    return std::sqrt(q * weight_norm_sq(lambda)) / (1.0 + 2.0 * lambda);
}

}  // namespace

Interval ci_standard(double y2, double alpha) {
    detail::require_finite(y2, "y2");
    require_alpha(alpha);
    const double z = norm_quantile(1.0 - 0.5 * alpha);
    return {y2 - z, y2 + z};
}

Interval ci_partial(const Observation& y, double alpha, double holder_bound,
                    double lambda) {
    require_alpha(alpha);
    require_nonneg(holder_bound, "holder_bound");
    require_nonneg(lambda, "lambda");
    const double c = regularized_center(y, lambda);
    const double h = partial_half_width(lambda, alpha, holder_bound);
    return {c - h, c + h};
}

Interval ci_regularized(const Observation& y, double alpha, double holder_bound,
                        double lambda) {
    require_alpha(alpha);
    require_nonneg(holder_bound, "holder_bound");
    require_nonneg(lambda, "lambda");
    const double c = regularized_center(y, lambda);
    const double h = regularized_half_width(lambda, alpha, holder_bound);
    return {c - h, c + h};
}

double noncentrality_g(double lambda, double holder_bound) {
    require_nonneg(lambda, "lambda");
    require_nonneg(holder_bound, "holder_bound");
    const double lb = lambda * holder_bound;
    return lb * lb / weight_norm_sq(lambda);
}

double len_l1(double lambda, double alpha, double holder_bound) {
    require_nonneg(lambda, "lambda");
    require_nonneg(holder_bound, "holder_bound");
    require_alpha(alpha);
    return 2.0 * partial_half_width(lambda, alpha, holder_bound);
}

double len_l2(double lambda, double alpha, double holder_bound) {
    require_nonneg(lambda, "lambda");
    require_nonneg(holder_bound, "holder_bound");
    require_alpha(alpha);
    return 2.0 * regularized_half_width(lambda, alpha, holder_bound);
}

double lambda1_star(double alpha, double holder_bound) {
    require_alpha(alpha);
    if (!(holder_bound > 0.0))
        throw std::domain_error(
            "lambda1_star: holder_bound must be > 0 (the B -> 0 optimum diverges; "
            "see optimal_length_l1 for the limiting length)");
    const double z = norm_quantile(1.0 - 0.5 * alpha);
    const double B = holder_bound;
    if (B > z) return 0.0;
    return (-B + std::sqrt(-B * B + 2.0 * z * z)) / (2.0 * B);
}

double optimal_length_l1(double alpha, double holder_bound) {
    require_alpha(alpha);
    require_nonneg(holder_bound, "holder_bound");
    const double z = norm_quantile(1.0 - 0.5 * alpha);
    const double B = holder_bound;
    if (B > z) return 2.0 * z;
    return B + std::sqrt(-B * B + 2.0 * z * z);
}

TunedResult lambda2_star(double alpha, double holder_bound) {
    require_alpha(alpha);
    if (!(holder_bound > 0.0))
        throw std::domain_error(
            "lambda2_star: holder_bound must be > 0 (as B -> 0 the optimal weight "
            "diverges with limiting length sqrt(2) z)");
    BracketConfig config;  // [0, 1] start, golden section to width 1e-8
    const ScalarMinimum m = minimize_scalar(
        [&](double lambda) { return len_l2(lambda, alpha, holder_bound); }, config);
    return {m.argmin, m.min, m.evaluations};
}

}  // namespace twomeans
