#pragma once

#include <functional>
#include <stdexcept>

namespace twomeans {

/// Controls for the bracket-then-shrink scalar minimizer.
struct BracketConfig {
    double initial_upper = 1.0;  // first trial upper bound, > 0
    int max_doublings = 60;      // expansion attempts before giving up
    double tolerance = 1e-8;     // final bracket width
};

struct ScalarMinimum {
    double argmin = 0.0;
    double min = 0.0;
    long evaluations = 0;  // objective calls made
};

/// Thrown when the expansion phase never sees the objective turn upward.
struct bracket_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Minimizes a continuous objective on [0, inf) that descends near 0 and is
/// eventually increasing: the upper bound is doubled until the objective
/// rises over a doubling, then golden-section search shrinks the bracket to
/// config.tolerance. Returns the best point evaluated anywhere along the way.
ScalarMinimum minimize_scalar(const std::function<double(double)>& f,
                              const BracketConfig& config);

}  // namespace twomeans
