#include "intquant/gap.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "intquant/errors.hpp"
#include "intquant/numerics.hpp"
#include "intquant/parallel.hpp"

namespace intquant {

namespace {

void check_prob_open(double p, const char* what) {
    if (!(p > 0.0 && p < 1.0))
        throw DomainError(std::string(what) + ": p must lie in (0,1), got " +
                          std::to_string(p));
}

void check_upper_mean(const QuantileModel& m, const char* side) {
    if (!m.moment_class().finite_upper_first)
        throw MomentError(std::string(side) +
                          " model lacks a finite upper first moment");
}

// Exact integral of (level - G(x)) over [lo, hi] for a step cdf, as a sum of
// per-step terms.  Terms that are nonnegative in exact arithmetic stay
// nonnegative here: each is a product of two machine numbers.
double step_level_integral(const EmpiricalDistribution& g, double lo, double hi,
                           double level) {
    const auto& x = g.sorted();
    double n = static_cast<double>(x.size());
    KahanSum total;
    double cur = lo;
    std::size_t i = std::upper_bound(x.begin(), x.end(), lo) - x.begin();
    while (cur < hi) {
        double next = (i < x.size() && x[i] < hi) ? x[i] : hi;
        if (next > cur)
            total.add((level - static_cast<double>(i) / n) * (next - cur));
        cur = next;
        while (i < x.size() && x[i] == cur) ++i;
    }
    return total.value();
}

// Signed integral of (level - G(x)) over [a, b].
double level_minus_cdf_integral(const QuantileModel& g, double a, double b,
                                double level) {
    if (a == b) return 0.0;
    double sign = 1.0;
    double lo = a, hi = b;
    if (lo > hi) {
        std::swap(lo, hi);
        sign = -1.0;
    }
    if (const auto* emp = g.as_empirical())
        return sign * step_level_integral(*emp, lo, hi, level);
    auto f = [&g, level](double x) { return level - g.cdf(x); };
    return sign * integrate(f, lo, hi, 1e-11, g.cdf_breakpoints(lo, hi));
}

// Signed integral of G over [a, b].
double cdf_integral(const QuantileModel& g, double a, double b) {
    return -level_minus_cdf_integral(g, a, b, 0.0);
}

GapReport make_gap_report(const QuantileModel& f, const QuantileModel& g,
                          double p) {
    double xp = f.quantile(p);
    double yq = g.quantile(p);
    GapReport r;
    r.p = p;
    r.value = level_minus_cdf_integral(g, xp, yq, p);
    r.lower_bound = 0.0;
    r.upper_bound = (xp - yq) * (g.cdf(xp) - f.cdf(xp));
    r.bounds_applicable = f.continuous_at(xp);
    return r;
}

PointStatus classify(const Error& e) {
    if (dynamic_cast<const MomentError*>(&e)) return PointStatus::MomentError;
    if (dynamic_cast<const DomainError*>(&e)) return PointStatus::DomainError;
    if (dynamic_cast<const SingularityError*>(&e))
        return PointStatus::SingularityError;
    if (dynamic_cast<const NumericError*>(&e)) return PointStatus::NumericError;
    if (dynamic_cast<const DataError*>(&e)) return PointStatus::DataError;
    return PointStatus::OtherError;
}

}  // namespace

GapReport gamma_star(const QuantileModel& f, const QuantileModel& g, double p) {
    check_prob_open(p, "gamma_star");
    return make_gap_report(f, g, p);
}

GapReport gamma(const QuantileModel& f, const QuantileModel& g, double p) {
    check_prob_open(p, "gamma");
    check_upper_mean(f, "gamma: first");
    check_upper_mean(g, "gamma: second");
    return make_gap_report(f, g, p);
}

GapReport delta(const QuantileModel& f, const QuantileModel& g, double p,
                double z) {
    check_prob_open(p, "delta");
    check_upper_mean(f, "delta: first");
    check_upper_mean(g, "delta: second");
    if (!std::isfinite(z)) throw DomainError("delta: z must be finite");
    double xp = f.quantile(p);
    double yq = g.quantile(p);
    GapReport r;
    r.p = p;
    r.z = z;
    double gap = level_minus_cdf_integral(g, xp, yq, p);
    double shift = cdf_integral(g, xp, z) - cdf_integral(f, xp, z);
    r.value = gap + shift;
    r.lower_bound = (f.cdf(z) - p) * (xp - z);
    r.upper_bound = (g.cdf(z) - p) * (z - yq);
    r.bounds_applicable = true;
    return r;
}

double lomax_delta_closed_form(double alpha1, double alpha2, double p, double z) {
    if (!(alpha1 > 0.0) || !(alpha2 > 0.0))
        throw ParameterError("lomax delta closed form: alphas must be positive");
    if (!(alpha1 > 1.0) || !(alpha2 > 1.0))
        throw MomentError(
            "lomax delta closed form: requires alpha > 1 on both sides");
    check_prob_open(p, "lomax delta closed form");
    if (!(z >= 0.0))
        throw DomainError("lomax delta closed form: requires z >= 0");
    double s = 1.0 - p;
    double zz = 1.0 + z;
    return alpha1 / (alpha1 - 1.0) * std::pow(s, 1.0 - 1.0 / alpha1) -
           alpha2 / (alpha2 - 1.0) * std::pow(s, 1.0 - 1.0 / alpha2) -
           std::pow(zz, 1.0 - alpha1) / (alpha1 - 1.0) +
           std::pow(zz, 1.0 - alpha2) / (alpha2 - 1.0);
}

double lomax_gamma_closed_form(double alpha1, double alpha2, double p) {
    if (!(alpha1 > 0.0) || !(alpha2 > 0.0))
        throw ParameterError("lomax gamma closed form: alphas must be positive");
    if (alpha2 == 1.0)
        throw SingularityError(
            "lomax gamma closed form: undefined at alpha2 == 1");
    check_prob_open(p, "lomax gamma closed form");
    double s = 1.0 - p;
    return std::pow(s, (alpha1 - 1.0) / alpha1) +
           alpha2 / (1.0 - alpha2) * std::pow(s, (alpha2 - 1.0) / alpha2) -
           1.0 / (1.0 - alpha2) * std::pow(s, (alpha2 - 1.0) / alpha1);
}

const char* to_string(PointStatus s) {
    switch (s) {
        case PointStatus::Ok: return "ok";
        case PointStatus::MomentError: return "moment-error";
        case PointStatus::DomainError: return "domain-error";
        case PointStatus::SingularityError: return "singularity-error";
        case PointStatus::NumericError: return "numeric-error";
        case PointStatus::DataError: return "data-error";
        case PointStatus::OtherError: return "error";
    }
    return "error";
}

std::vector<CurvePoint> gamma_curve(const QuantileModel& f,
                                    const QuantileModel& g,
                                    const std::vector<double>& p_grid,
                                    std::size_t threads) {
    std::vector<CurvePoint> out(p_grid.size());
    parallel_for(p_grid.size(), threads, [&](std::size_t i) {
        CurvePoint& pt = out[i];
        pt.p = p_grid[i];
        try {
            pt.report = gamma_star(f, g, p_grid[i]);
            pt.status = PointStatus::Ok;
        } catch (const Error& e) {
            pt.status = classify(e);
            pt.message = e.what();
        }
    });
    return out;
}

std::vector<SurfacePoint> delta_surface(const QuantileModel& f,
                                        const QuantileModel& g,
                                        const std::vector<double>& p_grid,
                                        const std::vector<double>& z_grid,
                                        std::size_t threads) {
    check_upper_mean(f, "delta_surface: first");
    check_upper_mean(g, "delta_surface: second");
    std::vector<SurfacePoint> out(p_grid.size() * z_grid.size());
    parallel_for(out.size(), threads, [&](std::size_t idx) {
        std::size_t i = idx / z_grid.size();
        std::size_t j = idx % z_grid.size();
        SurfacePoint& pt = out[idx];
        pt.p = p_grid[i];
        pt.z = z_grid[j];
        try {
            pt.report = delta(f, g, pt.p, pt.z);
            pt.status = PointStatus::Ok;
        } catch (const Error& e) {
            pt.status = classify(e);
            pt.message = e.what();
        }
    });
    return out;
}

}  // namespace intquant
