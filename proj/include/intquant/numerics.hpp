#ifndef INTQUANT_NUMERICS_HPP
#define INTQUANT_NUMERICS_HPP

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace intquant {

// Compensated accumulator for long sums of similar-magnitude terms.
class KahanSum {
public:
    void add(double x) {
        double y = x - c_;
        double t = s_ + y;
        c_ = (t - s_) - y;
        s_ = t;
    }
    double value() const { return s_; }

private:
    double s_ = 0.0;
    double c_ = 0.0;
};

using Fn1 = std::function<double(double)>;

// Adaptive Simpson integration of f over [a, b].  Subdivision stops when the
// local Richardson estimate meets the (halved-per-split) absolute tolerance,
// when it meets rel_tol relative to the running whole-interval estimate, or
// at max_depth.  The returned value includes the Richardson correction.
double adaptive_simpson(const Fn1& f, double a, double b, double abs_tol,
                        double rel_tol = 1e-13, int max_depth = 52);

// Adaptive Simpson with the interval pre-split at the given interior
// breakpoints (cdf kinks, step locations).  Breakpoints outside (a, b) are
// ignored; the absolute tolerance is divided across segments by length.
double integrate(const Fn1& f, double a, double b, double abs_tol,
                 std::vector<double> breakpoints = {});

// Integral of f over [a, oo) for integrands that eventually decay:  windows
// [a, a+w], [a+w, a+3w], ... of doubling width are summed until two
// consecutive windows each contribute less than the tolerance.
double integrate_to_infinity(const Fn1& f, double a, double abs_tol,
                             double initial_width = 8.0);

// Smallest x in [lo, hi] with f(x) >= target, for nondecreasing f.
// Plain bisection to absolute tolerance x_tol on the bracket width.
double bisect_increasing(const Fn1& f, double target, double lo, double hi,
                         double x_tol = 1e-12);

// Golden-section minimization of a unimodal f over [a, b].  Returns
// (argmin, f(argmin)).  The bracket is first expanded geometrically while an
// endpoint beats the interior, so a rough initial bracket is acceptable.
std::pair<double, double> golden_section_min(const Fn1& f, double a, double b,
                                             double x_tol = 1e-10);

// Standard normal density, distribution function and quantile.  The quantile
// is Acklam's rational approximation polished with one Halley step, accurate
// to well below 1e-9 everywhere in (0,1).
double normal_pdf(double x);
double normal_cdf(double x);
double normal_quantile(double u);

}  // namespace intquant

#endif
