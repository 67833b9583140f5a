#ifndef INTQUANT_EMPIRICAL_HPP
#define INTQUANT_EMPIRICAL_HPP

#include <cstddef>
#include <vector>

namespace intquant {

// Empirical distribution of a finite sample.  The cdf is the right-continuous
// step function F_n(x) = #{i : x_i <= x} / n and the quantile is the
// left-continuous generalized inverse F_n^{-1}(u) = x_(k) with k the smallest
// integer satisfying k >= n*u.  All integrals against either function are
// finite sums and are computed exactly (no quadrature).
class EmpiricalDistribution {
public:
    // Copies and sorts the sample.  Rejects empty samples and non-finite
    // values.
    explicit EmpiricalDistribution(std::vector<double> values);

    std::size_t size() const { return sorted_.size(); }
    const std::vector<double>& sorted() const { return sorted_; }

    double cdf(double x) const;

    // 1-based order-statistic index k = min{ j : j >= n*u } clamped to [1,n].
    // The comparison against n*u is exact: the product is split with fma into
    // a rounded part and its residual, so u values sitting on or near a step
    // boundary resolve to the mathematically correct side.
    std::size_t quantile_index(double u) const;

    // x_(quantile_index(u)); domain (0, 1].
    double quantile(double u) const;

    bool has_atom_at(double x) const;

private:
    std::vector<double> sorted_;
};

// Exact integral of the empirical quantile over (p, 1]:
//   x_(k) * (k/n - p) + (1/n) * sum_{i=k+1..n} x_(i),  k = quantile_index(p).
double integrated_empirical_quantile(const EmpiricalDistribution& emp, double p);

// Exact integral of the empirical quantile over (0, p].
double lower_integrated_empirical_quantile(const EmpiricalDistribution& emp,
                                           double p);

// integrated_empirical_quantile / (1 - p).
double empirical_es(const EmpiricalDistribution& emp, double p);

}  // namespace intquant

#endif
