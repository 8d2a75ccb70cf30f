#pragma once

#include <rsd/common.hpp>

namespace rsd::special {

// Regularized incomplete beta I_x(a,b), continued fraction with the
// symmetry switch at x = (a+1)/(a+b+2).
double beta_inc(double a, double b, double x);

// Regularized lower/upper incomplete gamma P(a,x), Q(a,x).
double gamma_p(double a, double x);
double gamma_q(double a, double x);

double norm_cdf(double x);
double norm_quantile(double p);

// chi-squared with one degree of freedom
double chi2_1_cdf(double x);

// c(alpha): the 1-alpha quantile of chi^2_1, |cdf(c) - (1-alpha)| <= 1e-10.
double chi2_1_quantile(double alpha);

// U-shaped family on [lo, hi] with shape xi in (0,1); cdf is I_u(1-xi, xi)
// with u the affine map onto [0,1]. Ordered in xi: xi1 <= xi2 implies
// cdf(x; xi1) <= cdf(x; xi2) pointwise.
struct GeneralizedArcsine {
    double xi;
    double lo;
    double hi;

    GeneralizedArcsine(double xi_, double lo_, double hi_);

    double cdf(double x) const;
    double pdf(double x) const;
};

double arcsine_cdf(const GeneralizedArcsine& dist, double x);

// The uniform law on [lo, hi] is deliberately a separate handle; it is not a
// member of the arcsine family.
struct UniformCdf {
    double lo;
    double hi;
    double cdf(double x) const;
};

}  // namespace rsd::special
