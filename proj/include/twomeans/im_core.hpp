#pragma once

namespace twomeans {

/// Pair of observed draws, each modeled as N(theta_i, 1).
struct Observation {
    double y1;
    double y2;
    Observation(double y1_, double y2_);  // throws std::domain_error unless finite
};

/// Pair of mean parameters.
struct MeanPair {
    double theta1;
    double theta2;
    MeanPair(double theta1_, double theta2_);  // throws std::domain_error unless finite
};

/// Ridge-penalized ML estimate of the two means:
/// ([(1+l)y1 + l y2]/(1+2l), [l y1 + (1+l)y2]/(1+2l)).
MeanPair regularized_mle(const Observation& y, double lambda);

/// Penalized negative log-likelihood
/// (y1-t1)^2/2 + (y2-t2)^2/2 + lambda (t1-t2)^2/2.
double rnll(const MeanPair& theta, double lambda, const Observation& y);

/// Centered Wald statistic; chi-square(1, 0) distributed under the model.
double t1_statistic(const Observation& y, const MeanPair& theta, double lambda);

/// Uncentered Wald statistic; depends on theta only through theta2 and is
/// chi-square(1, lambda^2 (theta1-theta2)^2 / [lambda^2+(1+lambda)^2])
/// distributed under the model.
double t2_statistic(const Observation& y, double theta2, double lambda);

/// Possibility contour for theta2 that ignores y1: 1 - F((y2-theta2)^2; 1, 0).
double contour_standard(double y2, double theta2);

/// Joint contour from the centered statistic.
double contour_joint_t1(const Observation& y, const MeanPair& theta, double lambda);

/// Marginal contour for theta2 from the centered statistic under the
/// constraint |theta1 - theta2| <= holder_bound: flat at 1 on the plateau
/// between the two shifted modes, shifted central chi-square tails outside.
double contour_marginal_t1(const Observation& y, double theta2, double lambda,
                           double holder_bound);

/// Joint contour from the uncentered statistic (noncentral calibration).
double contour_joint_t2(const Observation& y, const MeanPair& theta, double lambda);

/// Marginal contour for theta2 from the uncentered statistic; the supremum
/// over admissible theta1 is attained at |theta1 - theta2| = holder_bound.
double contour_marginal_t2(const Observation& y, double theta2, double lambda,
                           double holder_bound);

}  // namespace twomeans
