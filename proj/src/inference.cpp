#include "intquant/inference.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>

#include "intquant/empirical.hpp"
#include "intquant/errors.hpp"
#include "intquant/numerics.hpp"
#include "intquant/parallel.hpp"
#include "intquant/rng.hpp"
#include "intquant/variance.hpp"

namespace intquant {

namespace {

void check_level(double level) {
    if (!(level > 0.0 && level < 1.0)) {
        throw DomainError("confidence level must lie in (0, 1)");
    }
}

void check_prob(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError("tail level p must lie in (0, 1)");
    }
}

double median_of(std::vector<double> v) {
    std::sort(v.begin(), v.end());
    const std::size_t n = v.size();
    if (n == 0) throw DataError("median of an empty set");
    const std::size_t mid = n / 2;
    if (n % 2 == 1) return v[mid];
    return 0.5 * (v[mid - 1] + v[mid]);
}

bool strictly_decreasing(const std::vector<double>& v) {
    for (std::size_t i = 1; i < v.size(); ++i) {
        if (!(v[i] < v[i - 1])) return false;
    }
    return true;
}

}  // namespace

GapReport remainder_gamma(const QuantileModel& f,
                          const std::vector<double>& sample, double p) {
    EmpiricalDistribution emp(sample);
    return gamma(f, QuantileModel(std::move(emp)), p);
}

InferenceResult es_confidence_interval(const std::vector<double>& sample,
                                       double p, double level,
                                       const VarianceSource& variance) {
    check_prob(p);
    check_level(level);
    EmpiricalDistribution emp(sample);
    const std::size_t n = emp.size();

    InferenceResult res;
    res.level = level;
    res.n = n;
    res.estimate = empirical_es(emp, p);

    double sigma2 = 0.0;
    if (std::holds_alternative<PlugInVariance>(variance)) {
        sigma2 = sigma2_plugin(emp, p).sigma2;
    } else {
        const auto& src = std::get<AnalyticVariance>(variance);
        sigma2 = sigma2_tail_variance(src.model, p).sigma2;
    }

    if (n < 30) {
        res.warnings.push_back(
            "small sample (n < 30): the normal approximation may be poor");
    }
    if (sigma2 <= 0.0) {
        res.warnings.push_back(
            "variance is zero: the interval degenerates to a point");
    }

    res.std_error =
        std::sqrt(sigma2 / static_cast<double>(n)) / (1.0 - p);
    const double z = normal_quantile(0.5 * (1.0 + level));
    res.ci_low = res.estimate - z * res.std_error;
    res.ci_high = res.estimate + z * res.std_error;
    return res;
}

CoverageReport mc_coverage_study(const QuantileModel& model, std::size_t n,
                                 std::size_t reps, double p, double level,
                                 std::uint64_t seed, VarianceKind variance,
                                 std::size_t threads) {
    check_prob(p);
    check_level(level);
    if (n < 2) throw ParameterError("coverage study needs n >= 2");
    if (reps == 0) throw ParameterError("coverage study needs reps >= 1");
    // The limit theorem behind the interval needs a finite second tail
    // moment, whichever way the variance is estimated.
    if (!model.moment_class().finite_upper_second) {
        throw MomentError("coverage study needs a finite upper second moment");
    }

    const double truth = model.integrated_upper_quantile(p) / (1.0 - p);
    const double z = normal_quantile(0.5 * (1.0 + level));

    // The analytic variance does not depend on the sample, so hoist it.
    double analytic_sigma2 = 0.0;
    if (variance == VarianceKind::Analytic) {
        analytic_sigma2 = sigma2_tail_variance(model, p).sigma2;
    }

    std::vector<unsigned char> covered(reps, 0);
    std::vector<double> width(reps, 0.0);

    parallel_for(reps, threads, [&](std::size_t r) {
        std::vector<double> sample = model.sample(sub_seed(seed, r), n);
        EmpiricalDistribution emp(std::move(sample));
        const double est = empirical_es(emp, p);
        double sigma2 = analytic_sigma2;
        if (variance == VarianceKind::PlugIn) {
            sigma2 = sigma2_plugin(emp, p).sigma2;
        }
        const double se =
            std::sqrt(sigma2 / static_cast<double>(n)) / (1.0 - p);
        covered[r] = (est - z * se <= truth && truth <= est + z * se) ? 1 : 0;
        width[r] = 2.0 * z * se;
    });

    // Reduce in index order so the totals do not depend on thread count.
    std::size_t hits = 0;
    KahanSum wsum;
    for (std::size_t r = 0; r < reps; ++r) {
        hits += covered[r];
        wsum.add(width[r]);
    }

    CoverageReport rep;
    rep.n = n;
    rep.reps = reps;
    rep.p = p;
    rep.level = level;
    rep.seed = seed;
    rep.variance = variance;
    rep.coverage = static_cast<double>(hits) / static_cast<double>(reps);
    rep.mean_width = wsum.value() / static_cast<double>(reps);
    rep.covered = std::move(covered);
    rep.widths = std::move(width);
    return rep;
}

RemainderDecayReport mc_remainder_decay(const QuantileModel& model,
                                        const std::vector<std::size_t>& n_list,
                                        std::size_t reps, double p,
                                        std::uint64_t seed,
                                        std::size_t threads) {
    check_prob(p);
    if (n_list.empty()) throw ParameterError("remainder study needs sample sizes");
    if (reps == 0) throw ParameterError("remainder study needs reps >= 1");
    for (std::size_t n : n_list) {
        if (n == 0) throw ParameterError("sample sizes must be positive");
    }

    RemainderDecayReport rep;
    rep.p = p;
    rep.reps = reps;
    rep.seed = seed;
    rep.rows.resize(n_list.size());
    for (std::size_t j = 0; j < n_list.size(); ++j) {
        rep.rows[j].n = n_list[j];
        rep.rows[j].values.assign(reps, 0.0);
    }

    // One flat job per (size, replication) pair; the replication stream index
    // j * reps + r keeps every job's randomness independent of scheduling.
    parallel_for(n_list.size() * reps, threads, [&](std::size_t idx) {
        const std::size_t j = idx / reps;
        const std::size_t r = idx % reps;
        const std::size_t n = n_list[j];
        std::vector<double> sample =
            model.sample(sub_seed(seed, j * reps + r), n);
        const GapReport g = remainder_gamma(model, sample, p);
        rep.rows[j].values[r] =
            std::sqrt(static_cast<double>(n)) * g.value;
    });

    std::vector<double> medians;
    for (auto& row : rep.rows) {
        row.median_scaled_gap = median_of(row.values);
        medians.push_back(row.median_scaled_gap);
    }
    rep.medians_decreasing = strictly_decreasing(medians);
    return rep;
}

ConsistencyReport consistency_check(const QuantileModel& model,
                                    const std::vector<std::size_t>& n_list,
                                    std::size_t reps, double p,
                                    std::uint64_t seed, std::size_t threads) {
    check_prob(p);
    if (n_list.empty()) throw ParameterError("consistency check needs sample sizes");
    if (reps == 0) throw ParameterError("consistency check needs reps >= 1");
    for (std::size_t n : n_list) {
        if (n == 0) throw ParameterError("sample sizes must be positive");
    }

    const double truth = model.integrated_upper_quantile(p);

    std::vector<std::vector<double>> errs(n_list.size());
    for (auto& e : errs) e.assign(reps, 0.0);

    parallel_for(n_list.size() * reps, threads, [&](std::size_t idx) {
        const std::size_t j = idx / reps;
        const std::size_t r = idx % reps;
        std::vector<double> sample =
            model.sample(sub_seed(seed, j * reps + r), n_list[j]);
        EmpiricalDistribution emp(std::move(sample));
        errs[j][r] = std::abs(integrated_empirical_quantile(emp, p) - truth);
    });

    ConsistencyReport rep;
    rep.p = p;
    rep.reps = reps;
    rep.seed = seed;
    std::vector<double> medians;
    for (std::size_t j = 0; j < n_list.size(); ++j) {
        ConsistencyRow row;
        row.n = n_list[j];
        row.median_abs_error = median_of(errs[j]);
        medians.push_back(row.median_abs_error);
        rep.rows.push_back(row);
    }
    rep.medians_decreasing = strictly_decreasing(medians);
    return rep;
}

}  // namespace intquant
