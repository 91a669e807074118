#pragma once

namespace twomeans {

/// Standard normal density.
double norm_pdf(double x);

/// Standard normal CDF. Absolute error below 1e-14; output clamped to [0, 1].
/// Throws std::domain_error for non-finite x.
double norm_cdf(double x);

/// Standard normal quantile for p in (0, 1). Throws std::domain_error otherwise.
double norm_quantile(double p);

/// CDF of the chi-square distribution with 1 degree of freedom and
/// noncentrality parameter gamma >= 0, evaluated at x >= 0.
double chisq1_cdf(double x, double gamma);

/// Quantile of chi-square(1, gamma): smallest q with chisq1_cdf(q, gamma) = p,
/// p in (0, 1). Inverted to 1e-12 in x.
double chisq1_quantile(double p, double gamma);

/// Derivative with respect to mu of h(mu) = sqrt(chisq1_quantile(p, mu^2)),
/// mu >= 0. Equals [phi(|h-mu|) - phi(|h+mu|)] / [phi(|h-mu|) + phi(|h+mu|)];
/// lies in [0, 1) and is positive for mu > 0.
double chisq1_quantile_dmu(double p, double mu);

}  // namespace twomeans
