#pragma once

#include <cmath>
#include <stdexcept>
#include <string>

namespace twomeans::detail {

inline void require_finite(double v, const char* what) {
    if (!std::isfinite(v))
        throw std::domain_error(std::string(what) + " must be finite");
}

inline void require_nonneg(double v, const char* what) {
    if (!std::isfinite(v) || v < 0.0)
        throw std::domain_error(std::string(what) + " must be finite and >= 0");
}

// alpha range accepted by the interval layer
inline void require_alpha(double alpha) {
    if (!(alpha > 1e-6 && alpha < 1.0 - 1e-6))
        throw std::domain_error("alpha must lie in (1e-6, 1 - 1e-6)");
}

// lambda^2 + (1 + lambda)^2, the squared norm of the estimator weights
inline double weight_norm_sq(double lambda) {
    return lambda * lambda + (1.0 + lambda) * (1.0 + lambda);
}

}  // namespace twomeans::detail
