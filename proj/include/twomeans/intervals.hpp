#pragma once

#include "twomeans/im_core.hpp"

namespace twomeans {

/// Closed interval [lower, upper].
struct Interval {
    double lower;
    double upper;
    double length() const { return upper - lower; }
};

/// Result of numeric penalty-weight tuning.
struct TunedResult {
    double lambda_star;
    double length_star;
    long evaluations;  // objective calls spent by the search
};

/// Textbook interval [y2 - z_{1-a/2}, y2 + z_{1-a/2}].
Interval ci_standard(double y2, double alpha);

/// Upper alpha-cut of the centered-statistic marginal contour:
/// center +/- [lambda B + z_{1-a/2} sqrt(lambda^2+(1+lambda)^2)]/(1+2 lambda).
Interval ci_partial(const Observation& y, double alpha, double holder_bound,
                    double lambda);

/// Upper alpha-cut of the uncentered-statistic marginal contour: same center,
/// half-width sqrt(Q_{1-a}(g) [lambda^2+(1+lambda)^2])/(1+2 lambda).
Interval ci_regularized(const Observation& y, double alpha, double holder_bound,
                        double lambda);

/// Noncentrality of the uncentered statistic at the constraint boundary:
/// g(lambda, B) = lambda^2 B^2 / [lambda^2 + (1+lambda)^2]. Increases from 0
/// to B^2/2 as lambda grows.
double noncentrality_g(double lambda, double holder_bound);

/// Length of ci_partial; free of the data.
double len_l1(double lambda, double alpha, double holder_bound);

/// Length of ci_regularized; free of the data and never above len_l1.
double len_l2(double lambda, double alpha, double holder_bound);

/// Closed-form minimizer of len_l1 over lambda:
/// (-B + sqrt(-B^2 + 2 z^2)) / (2B) when B <= z_{1-a/2}, else 0.
/// Requires holder_bound > 0.
double lambda1_star(double alpha, double holder_bound);

/// min over lambda of len_l1: B + sqrt(2 z^2 - B^2) when B <= z_{1-a/2},
/// else 2z. Accepts holder_bound = 0 (the pooled limit sqrt(2) z).
double optimal_length_l1(double alpha, double holder_bound);

/// Numeric minimizer of len_l2 over lambda (bracket + golden section).
/// Requires holder_bound > 0; throws bracket_error if no bracket is found.
TunedResult lambda2_star(double alpha, double holder_bound);

}  // namespace twomeans
