// Acceptance gate: one criterion per invocation, one [PASS]/[FAIL] line.
// Each criterion re-derives its expectations from closed forms or from
// independent routes; none of them trusts the code path it is checking.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "intquant/distributions.hpp"
#include "intquant/empirical.hpp"
#include "intquant/gap.hpp"
#include "intquant/inference.hpp"
#include "intquant/numerics.hpp"
#include "intquant/riskmeasures.hpp"
#include "intquant/rng.hpp"
#include "intquant/variance.hpp"

using namespace intquant;

namespace {

std::string g_cli_path;

double max_abs(double a, double b) { return std::max(std::abs(a), std::abs(b)); }

// ---------------------------------------------------------------- criterion 1
// Closed-form oracle grid: the Lomax pair formulas for the extended gap and
// the difference functional agree with the quadrature implementations to
// 1e-8 across a 20x20 tail-index grid (1 excluded), 9 levels, 9 cut points.
bool criterion1() {
    const std::vector<double> alphas = {0.1, 0.2, 0.3, 0.4, 0.5,  0.6, 0.7,
                                        0.8, 0.9, 1.25, 1.5, 2.0, 2.5, 3.0,
                                        4.0, 5.0, 6.0,  8.0, 10.0, 12.0};
    const std::vector<double> ps = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    const std::vector<double> zs = {0.0, 0.25, 0.5, 0.75, 1.0, 1.5, 2.0, 3.0, 5.0};
    // The low-tail-index corner of the grid has gap values of order 1e8+,
    // where a 1e-8 absolute match exceeds double precision (it would need 17
    // significant digits).  The tolerance is therefore absolute where the
    // closed form is O(1) and relative to the value's scale beyond that.
    double worst_gamma = 0.0, worst_gamma_scaled = 0.0, worst_delta = 0.0;
    double biggest = 0.0;
    std::size_t n_gamma = 0, n_delta = 0;
    for (double a1 : alphas) {
        const QuantileModel f(Lomax(a1, 1.0));
        for (double a2 : alphas) {
            const QuantileModel g(Lomax(a2, 1.0));
            for (double p : ps) {
                const double ref = lomax_gamma_closed_form(a1, a2, p);
                const double got = gamma_star(f, g, p).value;
                const double err = std::abs(got - ref);
                if (std::abs(ref) <= 1.0) worst_gamma = std::max(worst_gamma, err);
                worst_gamma_scaled =
                    std::max(worst_gamma_scaled, err / std::max(1.0, std::abs(ref)));
                biggest = std::max(biggest, std::abs(ref));
                ++n_gamma;
                if (a1 > 1.0 && a2 > 1.0) {
                    for (double z : zs) {
                        const double dref = lomax_delta_closed_form(a1, a2, p, z);
                        const double dgot = delta(f, g, p, z).value;
                        worst_delta = std::max(worst_delta, std::abs(dgot - dref));
                        ++n_delta;
                    }
                }
            }
        }
    }
    std::printf("  gap evaluations: %zu (values up to %.3g), worst deviation: "
                "%.3g absolute on O(1) values, %.3g scaled overall\n",
                n_gamma, biggest, worst_gamma, worst_gamma_scaled);
    std::printf("  difference evaluations: %zu, worst |impl - closed form| = %.3g\n",
                n_delta, worst_delta);
    return worst_gamma <= 1e-8 && worst_gamma_scaled <= 1e-8 &&
           worst_delta <= 1e-8;
}

// ---------------------------------------------------------------- criterion 2
// Bound sandwich on 500 randomized (F, G, p, z) tuples: the proven envelope
// (F(z)-p)(F^-1(p)-z) <= delta <= (G(z)-p)(z-G^-1(p)) holds to 1e-8 and the
// envelope itself always brackets zero.
QuantileModel random_finite_mean_model(CounterRng& rng, std::uint64_t& c) {
    switch (static_cast<int>(rng.uniform(c++) * 4.0)) {
        case 0:
            return QuantileModel(
                Lomax(1.2 + 10.8 * rng.uniform(c++), 0.5 + 1.5 * rng.uniform(c++)));
        case 1:
            return QuantileModel(Exponential(0.3 + 2.7 * rng.uniform(c++)));
        case 2: {
            const double a = -1.0 + 2.0 * rng.uniform(c++);
            return QuantileModel(Uniform(a, a + 0.5 + 2.5 * rng.uniform(c++)));
        }
        default:
            return QuantileModel(Normal(-1.0 + 2.0 * rng.uniform(c++),
                                        0.3 + 1.7 * rng.uniform(c++)));
    }
}

bool criterion2() {
    CounterRng rng(90210, 0);
    std::uint64_t c = 0;
    double worst_violation = 0.0;
    bool envelope_ok = true;
    for (int rep = 0; rep < 500; ++rep) {
        const QuantileModel f = random_finite_mean_model(rng, c);
        const QuantileModel g = random_finite_mean_model(rng, c);
        const double p = 0.02 + 0.96 * rng.uniform(c++);
        const double z = f.quantile(0.01 + 0.98 * rng.uniform(c++));
        const GapReport r = delta(f, g, p, z);
        worst_violation = std::max(worst_violation, r.lower_bound - r.value);
        worst_violation = std::max(worst_violation, r.value - r.upper_bound);
        if (r.lower_bound > 1e-12 || r.upper_bound < -1e-12) envelope_ok = false;
    }
    std::printf("  500 tuples, worst bound violation = %.3g, envelope brackets 0: %s\n",
                worst_violation, envelope_ok ? "yes" : "no");
    return worst_violation <= 1e-8 && envelope_ok;
}

// ---------------------------------------------------------------- criterion 3
// The gap and the extended gap agree to 1e-8 wherever both exist, and the
// extended gap stays >= -1e-12 even for infinite-mean tail indices.
bool criterion3() {
    const std::vector<QuantileModel> finite = {
        QuantileModel(Lomax(10.0, 1.0)), QuantileModel(Lomax(2.5, 1.0)),
        QuantileModel(Exponential(1.0)), QuantileModel(Exponential(0.4)),
        QuantileModel(Uniform(0.0, 2.0)), QuantileModel(Normal(1.0, 0.7))};
    const std::vector<double> ps = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};
    double worst_pair = 0.0;
    for (const auto& f : finite)
        for (const auto& g : finite)
            for (double p : ps)
                worst_pair = std::max(
                    worst_pair,
                    std::abs(gamma(f, g, p).value - gamma_star(f, g, p).value));
    double most_negative = 0.0;
    for (double a1 = 0.1; a1 < 0.95; a1 += 0.1)
        for (double a2 = 0.1; a2 < 0.95; a2 += 0.1)
            for (double p : ps)
                most_negative = std::min(
                    most_negative, gamma_star(QuantileModel(Lomax(a1, 1.0)),
                                              QuantileModel(Lomax(a2, 1.0)), p)
                                       .value);
    std::printf("  finite-mean pairs: worst |gap - extended gap| = %.3g\n", worst_pair);
    std::printf("  infinite-mean grid: most negative extended gap = %.3g\n",
                most_negative);
    return worst_pair <= 1e-8 && most_negative >= -1e-12;
}

// ---------------------------------------------------------------- criterion 4
// Empirical-gap sandwich: on every simulated replication the model-vs-sample
// gap sits in [0, (F^-1(p) - F_n^-1(p)) (F_n(x_p) - p)] up to 1e-12.
bool criterion4() {
    const std::vector<QuantileModel> models = {QuantileModel(Lomax(10.0, 1.0)),
                                               QuantileModel(Exponential(1.0)),
                                               QuantileModel(Uniform(0.0, 1.0))};
    double worst = 0.0;
    std::size_t n_checked = 0;
    for (std::size_t mi = 0; mi < models.size(); ++mi) {
        for (double p : {0.5, 0.9}) {
            for (std::uint64_t rep = 0; rep < 200; ++rep) {
                const auto xs =
                    models[mi].sample(sub_seed(4000 + 10 * mi + (p > 0.7), rep), 500);
                const GapReport r = remainder_gamma(models[mi], xs, p);
                worst = std::max(worst, -r.value);
                worst = std::max(worst, r.value - r.upper_bound);
                ++n_checked;
            }
        }
    }
    std::printf("  %zu replications, worst sandwich violation = %.3g\n", n_checked,
                worst);
    return worst <= 1e-12;
}

// ---------------------------------------------------------------- criterion 5
// Finite-sample decomposition: sqrt(n) (I(F) - I(F_n)) equals the centred
// influence sum plus sqrt(n) times the empirical gap, replication by
// replication, to 1e-9.
bool criterion5() {
    const QuantileModel f(Lomax(10.0, 1.0));
    const double p = 0.9;
    const double xp = f.quantile(p);
    const double mexc = f.expected_excess(xp);
    const double truth = f.integrated_upper_quantile(p);
    const std::size_t n = 1000;
    double worst = 0.0;
    for (std::uint64_t rep = 0; rep < 100; ++rep) {
        const auto xs = f.sample(sub_seed(555, rep), n);
        EmpiricalDistribution emp(xs);
        const double lhs =
            std::sqrt(double(n)) * (truth - integrated_empirical_quantile(emp, p));
        KahanSum acc;
        for (double x : xs) acc.add(mexc - std::max(x - xp, 0.0));
        const double rhs = acc.value() / std::sqrt(double(n)) +
                           std::sqrt(double(n)) * remainder_gamma(f, xs, p).value;
        worst = std::max(worst, std::abs(lhs - rhs));
    }
    std::printf("  100 replications at n = 1000, worst identity residual = %.3g\n",
                worst);
    return worst <= 1e-9;
}

// ---------------------------------------------------------------- criterion 6
// Scaled remainder decay: the median of sqrt(n) * gap(F, F_n) strictly
// decreases over n in {250, 1000, 4000} with 500 replications each.
bool criterion6() {
    const RemainderDecayReport r =
        mc_remainder_decay(QuantileModel(Lomax(10.0, 1.0)), {250, 1000, 4000}, 500,
                           0.9, 1);
    for (const auto& row : r.rows)
        std::printf("  n = %4zu: median scaled gap = %.6g\n", row.n,
                    row.median_scaled_gap);
    return r.medians_decreasing;
}

// ---------------------------------------------------------------- criterion 7
// Variance route agreement: the nested double integral of the joint-cdf
// covariance equals the tail-variance route to 1e-7 on 4 models x 5 levels,
// and both reproduce the independently derived excess-moment constant for
// the Lomax(3,1) law at p = 0.5.
bool criterion7() {
    const std::vector<QuantileModel> models = {
        QuantileModel(Lomax(3.0, 1.0)), QuantileModel(Exponential(1.0)),
        QuantileModel(Uniform(0.0, 1.0)), QuantileModel(Normal(0.0, 1.0))};
    double worst = 0.0;
    for (const auto& m : models)
        for (double p : {0.1, 0.25, 0.5, 0.75, 0.9})
            worst = std::max(worst, std::abs(sigma2_double_integral(m, p).sigma2 -
                                             sigma2_tail_variance(m, p).sigma2));
    // Var((X - x_p)_+) for Lomax(3,1), p = 0.5, from the excess moments
    // E (X-x)_+ = (1+x)^{-2}/2 and E (X-x)_+^2 = (1+x)^{-1} at 1+x = 2^{1/3}:
    // 2^{-1/3} - 2^{-4/3}... kept as the evaluated constant below, which the
    // double-integral route must reproduce independently.
    const double derived = 0.6944879602360873;
    const double di = sigma2_double_integral(QuantileModel(Lomax(3.0, 1.0)), 0.5).sigma2;
    const double tv = sigma2_tail_variance(QuantileModel(Lomax(3.0, 1.0)), 0.5).sigma2;
    std::printf("  worst |double integral - tail variance| = %.3g\n", worst);
    std::printf("  Lomax(3,1) p=0.5: derived %.16g, double integral %.16g, tail %.16g\n",
                derived, di, tv);
    return worst <= 1e-7 && std::abs(di - derived) <= 1e-6 &&
           std::abs(tv - derived) <= 1e-6;
}

// ---------------------------------------------------------------- criterion 8
// Interval coverage and width scaling: 2000 replications of the level-0.95
// interval at n = 2000 cover the true value between 93% and 97% of the time,
// and quadrupling n halves the mean width (ratio within [0.45, 0.55]).
bool criterion8() {
    const QuantileModel m(Lomax(3.0, 1.0));
    const CoverageReport cov = mc_coverage_study(m, 2000, 2000, 0.9, 0.95, 1);
    const CoverageReport w1 = mc_coverage_study(m, 1000, 200, 0.9, 0.95, 1);
    const CoverageReport w4 = mc_coverage_study(m, 4000, 200, 0.9, 0.95, 1);
    const double ratio = w4.mean_width / w1.mean_width;
    std::printf("  coverage = %.4f (target [0.93, 0.97])\n", cov.coverage);
    std::printf("  mean width ratio n=4000 / n=1000 = %.4f (target [0.45, 0.55])\n",
                ratio);
    return cov.coverage >= 0.93 && cov.coverage <= 0.97 && ratio >= 0.45 &&
           ratio <= 0.55;
}

// ---------------------------------------------------------------- criterion 9
// Curve and surface shape: gap curves across two tail-index families are
// nonnegative and decay at both grid endpoints (values at p = 0.01 and
// p = 0.99 below a tenth of the curve maximum); the difference surface is
// >= 0 along z = F^-1(p) and <= 0 along z = G^-1(p).
bool criterion9() {
    std::vector<double> grid;
    for (int i = 1; i <= 99; ++i) grid.push_back(i / 100.0);
    bool nonneg = true, decay = true;
    auto run_family = [&](double a1, const std::vector<double>& others) {
        const QuantileModel f(Lomax(a1, 1.0));
        for (double a2 : others) {
            const auto curve = gamma_curve(f, QuantileModel(Lomax(a2, 1.0)), grid);
            double mx = 0.0;
            for (const auto& pt : curve) {
                if (pt.status != PointStatus::Ok || pt.report.value < -1e-12)
                    nonneg = false;
                mx = std::max(mx, pt.report.value);
            }
            const double v_lo = curve.front().report.value;
            const double v_hi = curve.back().report.value;
            const bool ok = v_lo < mx / 10.0 && v_hi < mx / 10.0;
            if (!ok) decay = false;
            std::printf(
                "  curve %4.1f vs %4.1f: max %.6g, ends %.6g / %.6g (ratios %.2f / "
                "%.2f) %s\n",
                a1, a2, mx, v_lo, v_hi, v_lo / mx, v_hi / mx,
                ok ? "decays" : "no endpoint decay");
        }
    };
    run_family(10.0, {6.0, 7.0, 8.0, 9.0, 11.0, 12.0, 13.0, 14.0});
    run_family(0.5, {0.1, 0.2, 0.3, 0.4, 0.6, 0.7, 0.8, 0.9});

    const QuantileModel f(Lomax(10.0, 1.0));
    const QuantileModel g(Lomax(12.0, 1.0));
    std::vector<double> psurf, zsurf;
    for (int i = 1; i <= 19; ++i) psurf.push_back(0.05 * i);
    for (int i = 0; i <= 24; ++i) zsurf.push_back(0.25 * i);
    bool surface_ok = true;
    for (const auto& pt : delta_surface(f, g, psurf, zsurf))
        if (pt.status != PointStatus::Ok) surface_ok = false;
    double worst_low = 0.0, worst_high = 0.0;
    for (double p : psurf) {
        worst_low = std::min(worst_low, delta(f, g, p, f.quantile(p)).value);
        worst_high = std::max(worst_high, delta(f, g, p, g.quantile(p)).value);
    }
    const bool signs = worst_low >= -1e-10 && worst_high <= 1e-10;
    std::printf("  surface: grid clean %s; min along z=F^-1(p) = %.3g, max along "
                "z=G^-1(p) = %.3g\n",
                surface_ok ? "yes" : "no", worst_low, worst_high);
    return nonneg && decay && surface_ok && signs;
}

// --------------------------------------------------------------- criterion 10
// Variational cross-check: min_y (1-p) y + E (X - y)_+ equals the integrated
// upper quantile to 1e-7 for every model and level on the grid.
bool criterion10() {
    std::vector<QuantileModel> models = {
        QuantileModel(Lomax(3.0, 1.0)),  QuantileModel(Lomax(10.0, 1.0)),
        QuantileModel(Exponential(1.0)), QuantileModel(Uniform(0.0, 1.0)),
        QuantileModel(Normal(0.0, 1.0))};
    models.push_back(
        QuantileModel(EmpiricalDistribution(models[0].sample(808, 257))));
    double worst = 0.0;
    for (const auto& m : models) {
        for (int i = 1; i <= 19; ++i) {
            const double p = 0.05 * i;
            worst = std::max(worst, std::abs(ru_es_crosscheck(m, p).value -
                                             m.integrated_upper_quantile(p)));
        }
    }
    std::printf("  worst |minimized objective - integrated quantile| = %.3g\n",
                worst);
    return worst <= 1e-7;
}

// --------------------------------------------------------------- criterion 11
// Thread-count determinism: seeded and gridded commands emit byte-identical
// output under INTQUANT_THREADS=1 and INTQUANT_THREADS=8, twice each.
std::optional<std::string> run_cli_capture(const std::string& threads,
                                           const std::string& args,
                                           const std::string& out_path) {
    const std::string cmd = "INTQUANT_THREADS=" + threads + " '" + g_cli_path +
                            "' " + args + " > '" + out_path + "' 2>/dev/null";
    if (std::system(cmd.c_str()) != 0) return std::nullopt;
    std::ifstream in(out_path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

bool criterion11() {
    if (g_cli_path.empty()) {
        std::printf("  no --cli path given\n");
        return false;
    }
    const std::vector<std::string> commands = {
        "mc-coverage --f lomax:3,1 --n 300 --reps 200 --p 0.9 --seed 17 "
        "--format csv --verbose",
        "mc-remainder --f lomax:10,1 --n-list 100,400,1600 --reps 100 --p 0.9 "
        "--seed 17 --format json --verbose",
        "gap --f lomax:10,1 --g lomax:8,1 --p-grid 0.01:0.99:0.01",
        "surface --f lomax:10,1 --g lomax:12,1 --p-grid 0.05:0.95:0.05 "
        "--z-grid 0:6:0.5",
        "es --input /tmp/intquant_accept_losses.txt --p 0.9 --variance analytic "
        "--f lomax:3,1"};
    {
        const QuantileModel m(Lomax(3.0, 1.0));
        std::ofstream f("/tmp/intquant_accept_losses.txt");
        for (double x : m.sample(99, 500)) {
            char buf[32];
            std::snprintf(buf, sizeof buf, "%.17g\n", x);
            f << buf;
        }
    }
    bool ok = true;
    int idx = 0;
    for (const auto& cmd : commands) {
        std::vector<std::string> outs;
        for (const std::string& threads : {"1", "8", "1", "8"}) {
            const std::string path =
                "/tmp/intquant_accept_" + std::to_string(idx) + "_" + threads +
                "_" + std::to_string(outs.size()) + ".out";
            const auto got = run_cli_capture(threads, cmd, path);
            if (!got) {
                std::printf("  command failed: %s\n", cmd.c_str());
                ok = false;
                break;
            }
            outs.push_back(*got);
        }
        bool same = outs.size() == 4;
        for (std::size_t i = 1; same && i < outs.size(); ++i)
            same = outs[i] == outs[0];
        if (!same) ok = false;
        std::printf("  %-12s bytes identical across runs and thread counts: %s\n",
                    cmd.substr(0, cmd.find(' ')).c_str(), same ? "yes" : "no");
        ++idx;
    }
    return ok;
}

struct Criterion {
    const char* description;
    bool (*fn)();
    double budget_seconds;  // 0 = no stated budget
};

const Criterion kCriteria[] = {
    {"closed-form oracle grid for the gap and difference functionals",
     criterion1, 30.0},
    {"two-sided bound sandwich on 500 randomized model pairs", criterion2, 30.0},
    {"gap/extended-gap agreement and moment-free nonnegativity", criterion3, 20.0},
    {"per-replication empirical-gap sandwich", criterion4, 60.0},
    {"finite-sample decomposition identity at n = 1000", criterion5, 0.0},
    {"strict decay of the median scaled remainder", criterion6, 120.0},
    {"variance route agreement and derived constant", criterion7, 60.0},
    {"interval coverage and width scaling", criterion8, 180.0},
    {"curve nonnegativity, endpoint decay, and surface sign structure",
     criterion9, 30.0},
    {"variational cross-check of the quantile integral", criterion10, 10.0},
    {"byte-identical output across thread counts", criterion11, 0.0},
};

}  // namespace

int main(int argc, char** argv) {
    int which = 0;
    for (int i = 1; i < argc; ++i) {
        const std::string a = argv[i];
        if (a == "--criterion" && i + 1 < argc) {
            which = std::atoi(argv[++i]);
        } else if (a == "--cli" && i + 1 < argc) {
            g_cli_path = argv[++i];
        } else {
            std::fprintf(stderr, "usage: acceptance --criterion N [--cli PATH]\n");
            return 2;
        }
    }
    if (which < 1 || which > 11) {
        std::fprintf(stderr, "criterion must be 1..11\n");
        return 2;
    }
    const Criterion& c = kCriteria[which - 1];
    const auto t0 = std::chrono::steady_clock::now();
    bool pass = false;
    try {
        pass = c.fn();
    } catch (const std::exception& e) {
        std::printf("  unexpected exception: %s\n", e.what());
        pass = false;
    }
    const double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
            .count();
    if (c.budget_seconds > 0.0) {
        std::printf("  elapsed %.1f s (budget %.0f s)\n", elapsed,
                    c.budget_seconds);
        if (elapsed > c.budget_seconds) pass = false;
    } else {
        std::printf("  elapsed %.1f s\n", elapsed);
    }
    std::printf("[%s] criterion %d: %s\n", pass ? "PASS" : "FAIL", which,
                c.description);
    return pass ? 0 : 1;
}
