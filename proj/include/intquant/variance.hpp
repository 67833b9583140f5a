#ifndef INTQUANT_VARIANCE_HPP
#define INTQUANT_VARIANCE_HPP

#include "intquant/distributions.hpp"
#include "intquant/empirical.hpp"

namespace intquant {

enum class VarianceMethod { DoubleIntegral, TailVariance, PlugIn };

struct VarianceReport {
    double sigma2 = 0.0;
    VarianceMethod method = VarianceMethod::TailVariance;
    double p = 0.0;
    double x_p = 0.0;
};

// Asymptotic variance of the integrated upper quantile estimator,
//   sigma^2_{F,p} = integral integral over [x_p, oo)^2 of
//                   (F(x ^ y) - F(x) F(y)) dx dy,   x_p = F^-1(p),
// computed from the cdf side: 2 * nested quadrature of F(x)(1 - F(y)) over
// the triangle x <= y truncated at F^-1(1 - 1e-8), plus an analytic
// tail-remainder from the model's excess-moment functions.  Exact finite sum
// of step areas when F is empirical.  Requires a finite upper second moment.
VarianceReport sigma2_double_integral(const QuantileModel& f, double p);

// Same quantity through the identity sigma^2 = Var((X - x_p)_+): each moment
// of the excess is a one-dimensional integral of the quantile over (p, 1),
// evaluated after the u = 1 - exp(-t) substitution (exact sums when F is
// empirical).  Kept deliberately disjoint from the double-integral route so
// the two can cross-validate each other.
VarianceReport sigma2_tail_variance(const QuantileModel& f, double p);

// Plug-in estimate from a sample: the sample variance (n-1 denominator) of
// (X_i - x_hat_p)_+ with x_hat_p the empirical quantile.  Requires n >= 2.
VarianceReport sigma2_plugin(const EmpiricalDistribution& emp, double p);

}  // namespace intquant

#endif
