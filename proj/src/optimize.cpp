#include "twomeans/optimize.hpp"

#include <cmath>
#include <limits>

namespace twomeans {

ScalarMinimum minimize_scalar(const std::function<double(double)>& f,
                              const BracketConfig& config) {
    if (!(config.initial_upper > 0.0))
        throw std::domain_error("minimize_scalar: initial_upper must be > 0");
    if (config.max_doublings < 1)
        throw std::domain_error("minimize_scalar: max_doublings must be >= 1");
    if (!(config.tolerance > 0.0))
        throw std::domain_error("minimize_scalar: tolerance must be > 0");

    ScalarMinimum best;
    best.min = std::numeric_limits<double>::infinity();
    auto eval = [&](double x) {
        const double fx = f(x);
        ++best.evaluations;
        if (fx < best.min) {
            best.min = fx;
            best.argmin = x;
        }
        return fx;
    };

    eval(0.0);

    // expansion: double the upper bound until the objective rises over a doubling
    double u = config.initial_upper;
    double fu = eval(u);
    double u2 = 2.0 * u;
    double fu2 = eval(u2);
    for (int doublings = 1; fu2 <= fu; ++doublings) {
        if (doublings >= config.max_doublings)
            throw bracket_error(
                "minimize_scalar: objective never increased within max_doublings");
        u = u2;
        fu = fu2;
        u2 = 2.0 * u;
        fu2 = eval(u2);
    }

    // golden-section shrink on [0, u2]
    const double invphi = 0.6180339887498949;
    const double invphi2 = 1.0 - invphi;
    double a = 0.0, b = u2;
    double x1 = a + invphi2 * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = eval(x1);
    double f2 = eval(x2);
    for (int it = 0; b - a > config.tolerance && it < 1000; ++it) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = a + invphi2 * (b - a);
            f1 = eval(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = eval(x2);
        }
    }
    return best;
}

}  // namespace twomeans
