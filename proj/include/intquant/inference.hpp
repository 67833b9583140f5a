#ifndef INTQUANT_INFERENCE_HPP
#define INTQUANT_INFERENCE_HPP

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "intquant/distributions.hpp"
#include "intquant/gap.hpp"

namespace intquant {

// Where the variance in a confidence interval comes from: estimated from the
// sample, or computed from a stated model.
struct PlugInVariance {};
struct AnalyticVariance {
    QuantileModel model;
};
using VarianceSource = std::variant<PlugInVariance, AnalyticVariance>;

enum class VarianceKind { PlugIn, Analytic };

struct InferenceResult {
    double estimate = 0.0;
    double std_error = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;
    double level = 0.0;
    std::size_t n = 0;
    std::vector<std::string> warnings;
};

// gamma_p(F, F_n) for the sample's empirical cdf, with the sandwich bounds
//   0 <= gamma_p(F, F_n) <= (F^-1(p) - F_n^-1(p)) (F_n(x_p) - F(x_p)).
// The integral against F_n is an exact finite sum.
GapReport remainder_gamma(const QuantileModel& f,
                          const std::vector<double>& sample, double p);

// Central-limit confidence interval for ES_p from a sample.  No density is
// estimated anywhere: the variance is either the plug-in variance of
// (X_i - x_hat_p)_+ or the model variance Var((X - x_p)_+).
//   estimate +- z_{(1+level)/2} * sqrt(sigma2 / n) / (1 - p).
InferenceResult es_confidence_interval(const std::vector<double>& sample,
                                       double p, double level,
                                       const VarianceSource& variance);

struct CoverageReport {
    std::size_t n = 0;
    std::size_t reps = 0;
    double p = 0.0;
    double level = 0.0;
    std::uint64_t seed = 0;
    VarianceKind variance = VarianceKind::Analytic;
    double coverage = 0.0;
    double mean_width = 0.0;
    std::vector<unsigned char> covered;  // per replication, in index order
    std::vector<double> widths;
};

// Simulates `reps` samples of size n from the model, builds the ES interval
// for each, and reports the fraction covering the true ES plus the mean
// interval width.  Replication r uses sub_seed(seed, r), so the result is a
// pure function of the arguments at any thread count.
CoverageReport mc_coverage_study(const QuantileModel& model, std::size_t n,
                                 std::size_t reps, double p, double level,
                                 std::uint64_t seed,
                                 VarianceKind variance = VarianceKind::Analytic,
                                 std::size_t threads = 0);

struct RemainderDecayRow {
    std::size_t n = 0;
    double median_scaled_gap = 0.0;       // median of sqrt(n) * gamma_p(F, F_n)
    std::vector<double> values;           // per-replication scaled gaps
};

struct RemainderDecayReport {
    double p = 0.0;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    std::vector<RemainderDecayRow> rows;
    bool medians_decreasing = false;
};

// Measures how fast sqrt(n) * gamma_p(F, F_n) dies as n grows; the medians
// should fall like n^{-1/2}, which is the content of the remainder being
// asymptotically negligible in the central limit expansion.
RemainderDecayReport mc_remainder_decay(const QuantileModel& model,
                                        const std::vector<std::size_t>& n_list,
                                        std::size_t reps, double p,
                                        std::uint64_t seed,
                                        std::size_t threads = 0);

struct ConsistencyRow {
    std::size_t n = 0;
    double median_abs_error = 0.0;
};

struct ConsistencyReport {
    double p = 0.0;
    std::size_t reps = 0;
    std::uint64_t seed = 0;
    std::vector<ConsistencyRow> rows;
    bool medians_decreasing = false;
};

// Median absolute error of the integrated empirical quantile against the
// model value, per sample size.  (The almost-sure convergence actually holds
// simultaneously over all p; only the stated grid is exercised here.)
ConsistencyReport consistency_check(const QuantileModel& model,
                                    const std::vector<std::size_t>& n_list,
                                    std::size_t reps, double p,
                                    std::uint64_t seed,
                                    std::size_t threads = 0);

}  // namespace intquant

#endif
