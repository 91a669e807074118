#include "oracles.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <limits>

#include "twomeans/specfun.hpp"

namespace oracles {

double erf_maclaurin(double x) {
    assert(std::fabs(x) <= 4.0);
    const double two_over_sqrt_pi = 1.1283791670955125739;
    double term = x;  // x^(2n+1) / n!
    double sum = 0.0;
    for (int n = 0; n < 400; ++n) {
        const double contrib = term / (2 * n + 1);
        sum += (n % 2 == 0) ? contrib : -contrib;
        if (std::fabs(contrib) < 1e-20 * std::fabs(sum) + 1e-300) break;
        term *= x * x / (n + 1);
    }
    return two_over_sqrt_pi * sum;
}

double norm_cdf_series(double x) {
    return 0.5 * (1.0 + erf_maclaurin(x * 0.7071067811865475244));
}

double bisect_increasing(const std::function<double(double)>& f, double target,
                         double lo, double hi, int iterations) {
    for (int i = 0; i < iterations; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) < target)
            lo = mid;
        else
            hi = mid;
    }
    return 0.5 * (lo + hi);
}

double gamma_p_series(double a, double x) {
    if (x <= 0.0) return 0.0;
    double term = 1.0 / a;
    double sum = term;
    for (int n = 1; n < 5000; ++n) {
        term *= x / (a + n);
        sum += term;
        if (term < sum * 1e-18) break;
    }
    return sum * std::exp(a * std::log(x) - x - std::lgamma(a));
}

double chisq1_cdf_mixture(double x, double gamma) {
    if (x <= 0.0) return 0.0;
    const double y = 0.5 * x;
    const double hg = 0.5 * gamma;
    if (hg == 0.0) return gamma_p_series(0.5, y);
    double sum = 0.0;
    double mass = 0.0;
    for (int j = 0; j < 20000; ++j) {
        const double w = std::exp(-hg + j * std::log(hg) - std::lgamma(j + 1.0));
        sum += w * gamma_p_series(j + 0.5, y);
        mass += w;
        if (1.0 - mass < 1e-18) break;
    }
    return sum;
}

double chisq1_cdf_normal_identity(double x, double gamma) {
    if (x <= 0.0) return 0.0;
    const double root = std::sqrt(x);
    const double mu = std::sqrt(gamma);
    return twomeans::norm_cdf(root - mu) - twomeans::norm_cdf(-root - mu);
}

double grid_max(const std::function<double(double)>& f, double lo, double hi, int n) {
    double best = -std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        best = std::max(best, f(x));
    }
    return best;
}

std::pair<double, double> grid_argmin(const std::function<double(double)>& f,
                                      double lo, double hi, int n) {
    double best_x = lo;
    double best = std::numeric_limits<double>::infinity();
    for (int i = 0; i <= n; ++i) {
        const double x = lo + (hi - lo) * i / n;
        const double fx = f(x);
        if (fx < best) {
            best = fx;
            best_x = x;
        }
    }
    return {best_x, best};
}

double ks_distance(std::vector<double> sample, const std::function<double(double)>& cdf) {
    std::sort(sample.begin(), sample.end());
    const double n = static_cast<double>(sample.size());
    double dist = 0.0;
    for (std::size_t i = 0; i < sample.size(); ++i) {
        const double F = cdf(sample[i]);
        const double lo = static_cast<double>(i) / n;
        const double hi = static_cast<double>(i + 1) / n;
        dist = std::max(dist, std::max(std::fabs(F - lo), std::fabs(F - hi)));
    }
    return dist;
}

}  // namespace oracles
