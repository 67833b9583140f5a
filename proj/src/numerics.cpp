#include "intquant/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "intquant/errors.hpp"

namespace intquant {

namespace {

struct SimpsonCtx {
    const Fn1* f;
    double rel_tol;
    double whole_scale;  // |estimate| of the full interval, for the relative test
    int max_depth;
};

double simpson_rec(const SimpsonCtx& ctx, double a, double b, double fa,
                   double fm, double fb, double whole, double tol, int depth) {
    double m = 0.5 * (a + b);
    double lm = 0.5 * (a + m);
    double rm = 0.5 * (m + b);
    double flm = (*ctx.f)(lm);
    double frm = (*ctx.f)(rm);
    double h = b - a;
    double left = h / 12.0 * (fa + 4.0 * flm + fm);
    double right = h / 12.0 * (fm + 4.0 * frm + fb);
    double delta = left + right - whole;
    if (depth >= ctx.max_depth || std::abs(delta) <= 15.0 * tol ||
        std::abs(delta) <= 15.0 * ctx.rel_tol * ctx.whole_scale) {
        return left + right + delta / 15.0;
    }
    return simpson_rec(ctx, a, m, fa, flm, fm, left, 0.5 * tol, depth + 1) +
           simpson_rec(ctx, m, b, fm, frm, fb, right, 0.5 * tol, depth + 1);
}

}  // namespace

double adaptive_simpson(const Fn1& f, double a, double b, double abs_tol,
                        double rel_tol, int max_depth) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    double fa = f(a);
    double m = 0.5 * (a + b);
    double fm = f(m);
    double fb = f(b);
    double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    SimpsonCtx ctx{&f, rel_tol, std::abs(whole), max_depth};
    return sign * simpson_rec(ctx, a, b, fa, fm, fb, whole, abs_tol, 0);
}

double integrate(const Fn1& f, double a, double b, double abs_tol,
                 std::vector<double> breakpoints) {
    if (a == b) return 0.0;
    double sign = 1.0;
    if (a > b) {
        std::swap(a, b);
        sign = -1.0;
    }
    std::vector<double> cuts;
    cuts.push_back(a);
    std::sort(breakpoints.begin(), breakpoints.end());
    for (double c : breakpoints) {
        if (c > a && c < b && c != cuts.back()) cuts.push_back(c);
    }
    cuts.push_back(b);
    double span = b - a;
    KahanSum total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        double len = cuts[i + 1] - cuts[i];
        if (len <= 0.0) continue;
        double seg_tol = std::max(abs_tol * (len / span), abs_tol * 1e-3);
        total.add(adaptive_simpson(f, cuts[i], cuts[i + 1], seg_tol));
    }
    return sign * total.value();
}

double integrate_to_infinity(const Fn1& f, double a, double abs_tol,
                             double initial_width) {
    KahanSum total;
    double lo = a;
    double w = initial_width;
    int consecutive_small = 0;
    for (int k = 0; k < 200; ++k) {
        double hi = lo + w;
        double piece = adaptive_simpson(f, lo, hi, abs_tol * 0.125);
        total.add(piece);
        if (std::abs(piece) < abs_tol * 0.125) {
            if (++consecutive_small >= 2) return total.value();
        } else {
            consecutive_small = 0;
        }
        lo = hi;
        w *= 2.0;
    }
    throw NumericError("integrate_to_infinity: tail did not decay");
}

double bisect_increasing(const Fn1& f, double target, double lo, double hi,
                         double x_tol) {
    if (!(lo <= hi)) throw NumericError("bisect_increasing: empty bracket");
    for (int i = 0; i < 200 && hi - lo > x_tol; ++i) {
        double m = 0.5 * (lo + hi);
        if (f(m) >= target)
            hi = m;
        else
            lo = m;
    }
    return 0.5 * (lo + hi);
}

std::pair<double, double> golden_section_min(const Fn1& f, double a, double b,
                                             double x_tol) {
    if (a > b) std::swap(a, b);
    constexpr double invphi = 0.6180339887498949;
    double fa = f(a);
    double fb = f(b);
    // Expand until neither endpoint beats a nearby interior probe.
    for (int k = 0; k < 200; ++k) {
        double w = std::max(b - a, 1e-12);
        double pa = a + 0.05 * w;
        double pb = b - 0.05 * w;
        bool grow_left = fa < f(pa);
        bool grow_right = fb < f(pb);
        if (!grow_left && !grow_right) break;
        if (grow_left) {
            a -= w;
            fa = f(a);
        }
        if (grow_right) {
            b += w;
            fb = f(b);
        }
        if (k == 199) throw NumericError("golden_section_min: no bracket");
    }
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > x_tol) {
        if (f1 <= f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    double xm = 0.5 * (a + b);
    return {xm, f(xm)};
}

double normal_pdf(double x) {
    constexpr double inv_sqrt_2pi = 0.3989422804014327;
    return inv_sqrt_2pi * std::exp(-0.5 * x * x);
}

double normal_cdf(double x) {
    constexpr double inv_sqrt2 = 0.7071067811865476;
    return 0.5 * std::erfc(-x * inv_sqrt2);
}

double normal_quantile(double u) {
    if (!(u > 0.0 && u < 1.0))
        throw DomainError("normal_quantile: argument must lie in (0,1)");

    // Acklam's rational approximation.
    static const double A[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                               -2.759285104469687e+02, 1.383577518672690e+02,
                               -3.066479806614716e+01, 2.506628277459239e+00};
    static const double B[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                               -1.556989798598866e+02, 6.680131188771972e+01,
                               -1.328068155288572e+01};
    static const double C[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                               -2.400758277161838e+00, -2.549732539343734e+00,
                               4.374664141464968e+00,  2.938163982698783e+00};
    static const double D[] = {7.784695709041462e-03, 3.224671290700398e-01,
                               2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double p_low = 0.02425;

    double x;
    if (u < p_low) {
        double q = std::sqrt(-2.0 * std::log(u));
        x = (((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
            ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
    } else if (u <= 1.0 - p_low) {
        double q = u - 0.5;
        double r = q * q;
        x = (((((A[0] * r + A[1]) * r + A[2]) * r + A[3]) * r + A[4]) * r + A[5]) * q /
            (((((B[0] * r + B[1]) * r + B[2]) * r + B[3]) * r + B[4]) * r + 1.0);
    } else {
        double q = std::sqrt(-2.0 * std::log1p(-u));
        x = -(((((C[0] * q + C[1]) * q + C[2]) * q + C[3]) * q + C[4]) * q + C[5]) /
            ((((D[0] * q + D[1]) * q + D[2]) * q + D[3]) * q + 1.0);
    }

    // One Halley step against the erfc-based cdf sharpens the approximation
    // to near machine precision; skip it where the density underflows.
    if (std::abs(x) < 37.0) {
        double e = normal_cdf(x) - u;
        double r = e / normal_pdf(x);
        x -= r / (1.0 + 0.5 * x * r);
    }
    return x;
}

}  // namespace intquant
