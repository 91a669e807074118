#include "twomeans/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace twomeans {
namespace {

constexpr double kInvSqrt2 = 0.7071067811865475244;
constexpr double kInvSqrt2Pi = 0.3989422804014326779;

double clamp01(double p) { return std::min(1.0, std::max(0.0, p)); }

/* Rational Chebyshev approximation to erf/erfc, W. J. Cody,
 * Math. Comp. 23 (1969), 631-638 (netlib specfun CALERF).
 * jint = 0 -> erf(x), jint = 1 -> erfc(x). */
double calerf(double x, int jint) {
    static const double a[5] = {3.1611237438705656, 113.864154151050156,
                                377.485237685302021, 3209.37758913846947,
                                0.185777706184603153};
    static const double b[4] = {23.6012909523441209, 244.024637934444173,
                                1282.61652607737228, 2844.23683343917062};
    static const double c[9] = {0.564188496988670089, 8.88314979438837594,
                                66.1191906371416295, 298.635138197400131,
                                881.95222124176909, 1712.04761263407058,
                                2051.07837782607147, 1230.33935479799725,
                                2.15311535474403846e-8};
    static const double d[8] = {15.7449261107098347, 117.693950891312499,
                                537.181101862009858, 1621.38957456669019,
                                3290.79923573345963, 4362.61909014324716,
                                3439.36767414372164, 1230.33935480374942};
    static const double p[6] = {0.305326634961232344, 0.360344899949804439,
                                0.125781726111229246, 0.0160837851487422766,
                                6.58749161529837803e-4, 0.0163153871373020978};
    static const double q[5] = {2.56852019228982242, 1.87295284992346047,
                                0.527905102951428412, 0.0605183413124413191,
                                0.00233520497626869185};

    const double sqrpi = 0.56418958354775628695;
    const double thresh = 0.46875;
    const double xsmall = 1.11e-16;
    const double xbig = 26.543;

    const double y = std::fabs(x);
    double result;

    if (y <= thresh) {
        // erf for |x| <= 0.46875
        double ysq = y > xsmall ? y * y : 0.0;
        double xnum = a[4] * ysq;
        double xden = ysq;
        for (int i = 0; i < 3; ++i) {
            xnum = (xnum + a[i]) * ysq;
            xden = (xden + b[i]) * ysq;
        }
        result = x * (xnum + a[3]) / (xden + b[3]);
        if (jint != 0) result = 1.0 - result;
        return result;
    } else if (y <= 4.0) {
        // erfc for 0.46875 < |x| <= 4
        double xnum = c[8] * y;
        double xden = y;
        for (int i = 0; i < 7; ++i) {
            xnum = (xnum + c[i]) * y;
            xden = (xden + d[i]) * y;
        }
        result = (xnum + c[7]) / (xden + d[7]);
        double ysq = std::floor(y * 16.0) / 16.0;
        double del = (y - ysq) * (y + ysq);
        result = std::exp(-ysq * ysq) * std::exp(-del) * result;
    } else {
        // erfc for |x| > 4
        if (y >= xbig) {
            result = 0.0;
        } else {
            double ysq = 1.0 / (y * y);
            double xnum = p[5] * ysq;
            double xden = ysq;
            for (int i = 0; i < 4; ++i) {
                xnum = (xnum + p[i]) * ysq;
                xden = (xden + q[i]) * ysq;
            }
            result = ysq * (xnum + p[4]) / (xden + q[4]);
            result = (sqrpi - result) / y;
            ysq = std::floor(y * 16.0) / 16.0;
            double del = (y - ysq) * (y + ysq);
            result = std::exp(-ysq * ysq) * std::exp(-del) * result;
        }
    }
    // fix up for erf / negative argument
    if (jint == 0) {
        result = (0.5 - result) + 0.5;
        if (x < 0.0) result = -result;
    } else if (x < 0.0) {
        result = 2.0 - result;
    }
    return result;
}

double erfc_impl(double x) { return calerf(x, 1); }

/* Regularized lower incomplete gamma P(a, x): power series for x < a + 1,
 * Lentz continued fraction for the complement otherwise. */
double gamma_p(double a, double x) {
    if (x <= 0.0) return 0.0;
    const double log_pre = a * std::log(x) - x - std::lgamma(a);
    if (x < a + 1.0) {
        double ap = a;
        double del = 1.0 / a;
        double sum = del;
        for (int n = 0; n < 1000; ++n) {
            ap += 1.0;
            del *= x / ap;
            sum += del;
            if (std::fabs(del) < std::fabs(sum) * 1e-17) break;
        }
        return sum * std::exp(log_pre);
    }
    const double fpmin = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / fpmin;
    double den = 1.0 / b;
    double h = den;
    for (int i = 1; i <= 1000; ++i) {
        double an = -i * (i - a);
        b += 2.0;
        den = an * den + b;
        if (std::fabs(den) < fpmin) den = fpmin;
        c = b + an / c;
        if (std::fabs(c) < fpmin) c = fpmin;
        den = 1.0 / den;
        double del = den * c;
        h *= del;
        if (std::fabs(del - 1.0) < 1e-16) break;
    }
    return 1.0 - std::exp(log_pre) * h;
}

void require_finite(double v, const char* what) {
    if (!std::isfinite(v)) throw std::domain_error(std::string(what) + " must be finite");
}

}  // namespace

double norm_pdf(double x) { return kInvSqrt2Pi * std::exp(-0.5 * x * x); }

double norm_cdf(double x) {
    require_finite(x, "norm_cdf: x");
    return clamp01(0.5 * erfc_impl(-x * kInvSqrt2));
}

/* AS 241 (Wichura 1988), accurate to about 1 part in 1e16. */
double norm_quantile(double p) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("norm_quantile: p must lie in (0, 1)");

    const double q = p - 0.5;
    if (std::fabs(q) <= 0.425) {
        const double r = 0.180625 - q * q;
        return q *
               (((((((r * 2509.0809287301226727 + 33430.575583588128105) * r +
                     67265.770927008700853) * r + 45921.953931549871457) * r +
                   13731.693765509461125) * r + 1971.5909503065514427) * r +
                 133.14166789178437745) * r + 3.387132872796366608) /
               (((((((r * 5226.495278852854561 + 28729.085735721942674) * r +
                     39307.89580009271061) * r + 21213.794301586595867) * r +
                   5394.1960214247511077) * r + 687.1870074920579083) * r +
                 42.313330701600911252) * r + 1.0);
    }

    double r = q < 0.0 ? p : 1.0 - p;
    r = std::sqrt(-std::log(r));
    double val;
    if (r <= 5.0) {
        r -= 1.6;
        val = (((((((r * 7.7454501427834140764e-4 + 0.0227238449892691845833) * r +
                    0.24178072517745061177) * r + 1.27045825245236838258) * r +
                  3.64784832476320460504) * r + 5.7694972214606914055) * r +
                4.6303378461565452959) * r + 1.42343711074968357734) /
              (((((((r * 1.05075007164441684324e-9 + 5.475938084995344946e-4) * r +
                    0.0151986665636164571966) * r + 0.14810397642748007459) * r +
                  0.68976733498510000455) * r + 1.6763848301838038494) * r +
                2.05319162663775882187) * r + 1.0);
    } else {
        r -= 5.0;
        val = (((((((r * 2.01033439929228813265e-7 + 2.71155556874348757815e-5) * r +
                    0.0012426609473880784386) * r + 0.026532189526576123093) * r +
                  0.29656057182850489123) * r + 1.7848265399172913358) * r +
                5.4637849111641143699) * r + 6.6579046435011037772) /
              (((((((r * 2.04426310338993978564e-15 + 1.4215117583164458887e-7) * r +
                    1.8463183175100546818e-5) * r + 7.868691311456132591e-4) * r +
                  0.0148753612908506148525) * r + 0.13692988092273580531) * r +
                0.59983220655588793769) * r + 1.0);
    }
    return q < 0.0 ? -val : val;
}

/* Poisson(gamma/2)-weighted mixture of central chi-square CDFs with
 * df = 1 + 2j. Terms are accumulated outward from the modal Poisson index
 * and stop once the unaccounted Poisson mass is below 1e-15; the central
 * CDF values follow the stable one-step incomplete-gamma recurrences. */
double chisq1_cdf(double x, double gamma) {
    require_finite(x, "chisq1_cdf: x");
    require_finite(gamma, "chisq1_cdf: gamma");
    if (x < 0.0) throw std::domain_error("chisq1_cdf: x must be >= 0");
    if (gamma < 0.0) throw std::domain_error("chisq1_cdf: gamma must be >= 0");
    if (x == 0.0) return 0.0;

    const double y = 0.5 * x;
    const double hg = 0.5 * gamma;
    if (hg == 0.0) return clamp01(gamma_p(0.5, y));

    const long m = static_cast<long>(hg);  // modal Poisson index
    const double wm = std::exp(-hg + m * std::log(hg) - std::lgamma(m + 1.0));
    const double cm = gamma_p(m + 0.5, y);
    // bridge term t_j = y^(j+1/2) e^(-y) / Gamma(j+3/2);
    // P(j+3/2, y) = P(j+1/2, y) - t_j
    const double tm = std::exp((m + 0.5) * std::log(y) - y - std::lgamma(m + 1.5));

    double sum = wm * cm;
    double mass = wm;

    // downward from the mode (finite, runs to j = 0)
    {
        double w = wm, cdf = cm, t = tm;
        for (long j = m; j > 0; --j) {
            w *= j / hg;
            t *= (j + 0.5) / y;  // t_{j-1} = t_j * (j + 1/2) / y
            cdf = std::min(1.0, cdf + t);
            sum += w * cdf;
            mass += w;
        }
    }
    // upward from the mode until the remaining tail mass is negligible
    {
        double w = wm, cdf = cm, t = tm;
        for (long j = m + 1; mass < 1.0 - 1e-15 && j <= m + 100000; ++j) {
            w *= hg / j;
            cdf -= t;
            if (cdf < 0.0) cdf = 0.0;
            t *= y / (j + 0.5);
            sum += w * cdf;
            mass += w;
            if (cdf == 0.0) break;  // all further terms contribute nothing
        }
    }
    return clamp01(sum);
}

double chisq1_quantile(double p, double gamma) {
    if (!(p > 0.0 && p < 1.0))
        throw std::domain_error("chisq1_quantile: p must lie in (0, 1)");
    require_finite(gamma, "chisq1_quantile: gamma");
    if (gamma < 0.0) throw std::domain_error("chisq1_quantile: gamma must be >= 0");

    const double z = norm_quantile(0.5 * (1.0 + p));
    if (gamma == 0.0) return z * z;  // square of a standard normal

    // bracket [0, u]: expand from the central quantile shifted by gamma
    double track_x = 0.0;
    double track_err = p;  // |cdf(0) - p|
    auto cdf_err = [&](double t) {
        double e = chisq1_cdf(t, gamma) - p;
        if (std::fabs(e) < track_err) {
            track_err = std::fabs(e);
            track_x = t;
        }
        return e;
    };

    double hi = z * z + gamma;
    double fhi = cdf_err(hi);
    for (int k = 0; fhi <= 0.0; ++k) {
        if (k >= 200) throw std::runtime_error("chisq1_quantile: bracket expansion failed");
        hi *= 2.0;
        fhi = cdf_err(hi);
    }
    double lo = 0.0;
    double flo = -p;

    // bisection/secant hybrid to 1e-12 in x, or to machine resolution for
    // far-tail arguments where adjacent doubles are wider apart than that
    const double eps = std::numeric_limits<double>::epsilon();
    bool bisect = false;
    while (hi - lo > 1e-12 && hi - lo > 4.0 * eps * hi) {
        double mid;
        if (!bisect && fhi > flo) {
            mid = lo - flo * (hi - lo) / (fhi - flo);
            const double margin = 0.01 * (hi - lo);
            if (!(mid > lo + margin && mid < hi - margin)) mid = 0.5 * (lo + hi);
        } else {
            mid = 0.5 * (lo + hi);
        }
        if (!(mid > lo && mid < hi)) break;  // bracket at machine resolution
        bisect = !bisect;
        const double fmid = cdf_err(mid);
        if (fmid > 0.0) {
            hi = mid;
            fhi = fmid;
        } else {
            lo = mid;
            flo = fmid;
        }
    }
    return track_x;
}

double chisq1_quantile_dmu(double p, double mu) {
    require_finite(mu, "chisq1_quantile_dmu: mu");
    if (mu < 0.0) throw std::domain_error("chisq1_quantile_dmu: mu must be >= 0");
    if (mu == 0.0) return 0.0;
    const double h = std::sqrt(chisq1_quantile(p, mu * mu));
    const double lo = norm_pdf(std::fabs(h - mu));
    const double hi = norm_pdf(std::fabs(h + mu));
    return (lo - hi) / (lo + hi);
}

}  // namespace twomeans
