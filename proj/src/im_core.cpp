#include "twomeans/im_core.hpp"

#include "twomeans/specfun.hpp"
#include "checks.hpp"

namespace twomeans {

using detail::require_finite;
using detail::require_nonneg;
using detail::weight_norm_sq;

Observation::Observation(double y1_, double y2_) : y1(y1_), y2(y2_) {
    require_finite(y1, "Observation: y1");
    require_finite(y2, "Observation: y2");
}

MeanPair::MeanPair(double theta1_, double theta2_) : theta1(theta1_), theta2(theta2_) {
    require_finite(theta1, "MeanPair: theta1");
    require_finite(theta2, "MeanPair: theta2");
}

MeanPair regularized_mle(const Observation& y, double lambda) {
    require_nonneg(lambda, "lambda");
    const double denom = 1.0 + 2.0 * lambda;
    return MeanPair(((1.0 + lambda) * y.y1 + lambda * y.y2) / denom,
                    (lambda * y.y1 + (1.0 + lambda) * y.y2) / denom);
}

double rnll(const MeanPair& theta, double lambda, const Observation& y) {
    require_nonneg(lambda, "lambda");
    const double r1 = y.y1 - theta.theta1;
    const double r2 = y.y2 - theta.theta2;
    const double d = theta.theta1 - theta.theta2;
    return 0.5 * r1 * r1 + 0.5 * r2 * r2 + 0.5 * lambda * d * d;
}

double t1_statistic(const Observation& y, const MeanPair& theta, double lambda) {
    require_nonneg(lambda, "lambda");
    const double r = lambda * (y.y1 - theta.theta2) + (1.0 + lambda) * (y.y2 - theta.theta2) -
                     lambda * (theta.theta1 - theta.theta2);
    return r * r / weight_norm_sq(lambda);
}

double t2_statistic(const Observation& y, double theta2, double lambda) {
    require_nonneg(lambda, "lambda");
    require_finite(theta2, "theta2");
    const double r = lambda * (y.y1 - theta2) + (1.0 + lambda) * (y.y2 - theta2);
    return r * r / weight_norm_sq(lambda);
}

double contour_standard(double y2, double theta2) {
    require_finite(y2, "y2");
    require_finite(theta2, "theta2");
    const double d = y2 - theta2;
    return 1.0 - chisq1_cdf(d * d, 0.0);
}

double contour_joint_t1(const Observation& y, const MeanPair& theta, double lambda) {
    return 1.0 - chisq1_cdf(t1_statistic(y, theta, lambda), 0.0);
}

double contour_marginal_t1(const Observation& y, double theta2, double lambda,
                           double holder_bound) {
    require_nonneg(lambda, "lambda");
    require_nonneg(holder_bound, "holder_bound");
    require_finite(theta2, "theta2");

    const double denom = 1.0 + 2.0 * lambda;
    const double center = (lambda * y.y1 + (1.0 + lambda) * y.y2) / denom;
    const double half_plateau = lambda * holder_bound / denom;
    if (theta2 >= center - half_plateau && theta2 <= center + half_plateau) return 1.0;

    const double s = lambda * (y.y1 - theta2) + (1.0 + lambda) * (y.y2 - theta2);
    const double shift = theta2 < center ? -lambda * holder_bound : lambda * holder_bound;
    const double stat = (s + shift) * (s + shift) / weight_norm_sq(lambda);
    return 1.0 - chisq1_cdf(stat, 0.0);
}

double contour_joint_t2(const Observation& y, const MeanPair& theta, double lambda) {
    const double d = theta.theta1 - theta.theta2;
    const double noncentrality = lambda * lambda * d * d / weight_norm_sq(lambda);
    return 1.0 - chisq1_cdf(t2_statistic(y, theta.theta2, lambda), noncentrality);
}

double contour_marginal_t2(const Observation& y, double theta2, double lambda,
                           double holder_bound) {
    require_nonneg(holder_bound, "holder_bound");
    const double noncentrality =
        lambda * lambda * holder_bound * holder_bound / weight_norm_sq(lambda);
    return 1.0 - chisq1_cdf(t2_statistic(y, theta2, lambda), noncentrality);
}

}  // namespace twomeans
