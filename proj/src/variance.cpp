#include "intquant/variance.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "intquant/errors.hpp"
#include "intquant/numerics.hpp"

namespace intquant {

namespace {

void check_prob_open(double p, const char* what) {
    if (!(p > 0.0 && p < 1.0))
        throw DomainError(std::string(what) + ": p must lie in (0,1), got " +
                          std::to_string(p));
}

void check_upper_second(const QuantileModel& f, const char* what) {
    if (!f.moment_class().finite_upper_second)
        throw MomentError(std::string(what) +
                          ": requires a finite upper second moment");
}

// Exact double integral for a step cdf: the integrand is piecewise constant
// on the grid of sample values, so the triangle decomposes into rectangles
// and diagonal blocks.
double empirical_double_integral(const EmpiricalDistribution& emp, double xp) {
    const auto& x = emp.sorted();
    double n = static_cast<double>(x.size());
    std::vector<double> level;
    std::vector<double> len;
    double cur = xp;
    std::size_t i = std::upper_bound(x.begin(), x.end(), xp) - x.begin();
    while (i < x.size()) {
        double next = x[i];
        if (next > cur) {
            level.push_back(static_cast<double>(i) / n);
            len.push_back(next - cur);
            cur = next;
        }
        while (i < x.size() && x[i] == cur) ++i;
    }
    // Suffix sums of (1 - c_l) * len_l.
    double suffix = 0.0;
    double total = 0.0;
    for (std::size_t j = level.size(); j-- > 0;) {
        double c = level[j];
        double L = len[j];
        total += 2.0 * c * L * suffix + c * (1.0 - c) * L * L;
        suffix += (1.0 - c) * L;
    }
    return total;
}

}  // namespace

VarianceReport sigma2_double_integral(const QuantileModel& f, double p) {
    check_prob_open(p, "sigma2 double integral");
    check_upper_second(f, "sigma2 double integral");
    double xp = f.quantile(p);
    VarianceReport rep;
    rep.method = VarianceMethod::DoubleIntegral;
    rep.p = p;
    rep.x_p = xp;
    if (const auto* emp = f.as_empirical()) {
        rep.sigma2 = empirical_double_integral(*emp, xp);
        return rep;
    }
    double delta = std::min(1e-8, 0.5 * (1.0 - p));
    double xm = f.quantile_complement(delta);
    double box = 0.0;
    if (xm > xp) {
        auto inner = [&f, xm](double x) {
            auto surv = [&f](double y) { return 1.0 - f.cdf(y); };
            return integrate(surv, x, xm, 1e-12, f.cdf_breakpoints(x, xm));
        };
        auto outer = [&f, &inner](double x) { return f.cdf(x) * inner(x); };
        box = 2.0 * integrate(outer, xp, xm, 1e-10, f.cdf_breakpoints(xp, xm));
    } else {
        xm = xp;
    }
    // Tail beyond the truncation point, from the closed tail moments:
    //   2 * S1(xm) * integral_{xp}^{xm} F  +  E[((X - xm)_+)^2],
    // the second term standing in for 2 * integral_{xm}^inf F * S1 with
    // relative error at most 1 - F(xm).
    double s1_xm = f.expected_excess(xm);
    double s1_xp = f.expected_excess(xp);
    double tail = 2.0 * s1_xm * ((xm - xp) - (s1_xp - s1_xm)) +
                  f.expected_excess_square(xm);
    rep.sigma2 = box + tail;
    return rep;
}

VarianceReport sigma2_tail_variance(const QuantileModel& f, double p) {
    check_prob_open(p, "sigma2 tail variance");
    check_upper_second(f, "sigma2 tail variance");
    double xp = f.quantile(p);
    VarianceReport rep;
    rep.method = VarianceMethod::TailVariance;
    rep.p = p;
    rep.x_p = xp;
    if (const auto* emp = f.as_empirical()) {
        const auto& x = emp->sorted();
        double n = static_cast<double>(x.size());
        KahanSum m1, m2;
        for (double v : x) {
            if (v > xp) {
                m1.add(v - xp);
                m2.add((v - xp) * (v - xp));
            }
        }
        double a = m1.value() / n;
        rep.sigma2 = m2.value() / n - a * a;
        return rep;
    }
    double t0 = -std::log1p(-p);
    auto m1f = [&f, xp](double t) {
        double s = std::exp(-t);
        return (f.quantile_complement(s) - xp) * s;
    };
    auto m2f = [&f, xp](double t) {
        double s = std::exp(-t);
        double d = f.quantile_complement(s) - xp;
        return d * d * s;
    };
    double m1 = integrate_to_infinity(m1f, t0, 1e-11);
    double m2 = integrate_to_infinity(m2f, t0, 1e-11);
    rep.sigma2 = m2 - m1 * m1;
    return rep;
}

VarianceReport sigma2_plugin(const EmpiricalDistribution& emp, double p) {
    check_prob_open(p, "sigma2 plug-in");
    if (emp.size() < 2)
        throw DataError("sigma2 plug-in: needs at least two observations");
    double xp = emp.quantile(p);
    const auto& x = emp.sorted();
    double n = static_cast<double>(x.size());
    KahanSum sum;
    for (double v : x) sum.add(v > xp ? v - xp : 0.0);
    double mean = sum.value() / n;
    KahanSum ss;
    for (double v : x) {
        double d = (v > xp ? v - xp : 0.0) - mean;
        ss.add(d * d);
    }
    VarianceReport rep;
    rep.method = VarianceMethod::PlugIn;
    rep.p = p;
    rep.x_p = xp;
    rep.sigma2 = ss.value() / (n - 1.0);
    return rep;
}

}  // namespace intquant
