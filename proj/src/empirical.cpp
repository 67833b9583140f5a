#include "intquant/empirical.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "intquant/errors.hpp"
#include "intquant/numerics.hpp"

namespace intquant {

EmpiricalDistribution::EmpiricalDistribution(std::vector<double> values)
    : sorted_(std::move(values)) {
    if (sorted_.empty())
        throw DataError("empirical distribution: sample is empty");
    for (double v : sorted_) {
        if (!std::isfinite(v))
            throw DataError("empirical distribution: non-finite sample value");
    }
    std::sort(sorted_.begin(), sorted_.end());
}

double EmpiricalDistribution::cdf(double x) const {
    auto it = std::upper_bound(sorted_.begin(), sorted_.end(), x);
    return static_cast<double>(it - sorted_.begin()) /
           static_cast<double>(sorted_.size());
}

std::size_t EmpiricalDistribution::quantile_index(double u) const {
    if (!(u > 0.0 && u <= 1.0))
        throw DomainError("empirical quantile: u must lie in (0,1], got " +
                          std::to_string(u));
    double n = static_cast<double>(sorted_.size());
    // hi + lo == n*u exactly (two-product via fma).
    double hi = n * u;
    double lo = std::fma(n, u, -hi);
    double c = std::ceil(hi);
    double k;
    if (c == hi) {
        k = (lo > 0.0) ? hi + 1.0 : hi;
    } else {
        // c-1 and hi are within one unit, so (c-1) - hi is exact; the test
        // decides whether the true product falls at or below the integer c-1.
        k = (lo <= (c - 1.0) - hi) ? c - 1.0 : c;
    }
    if (k < 1.0) k = 1.0;
    if (k > n) k = n;
    return static_cast<std::size_t>(k);
}

double EmpiricalDistribution::quantile(double u) const {
    return sorted_[quantile_index(u) - 1];
}

bool EmpiricalDistribution::has_atom_at(double x) const {
    return std::binary_search(sorted_.begin(), sorted_.end(), x);
}

double integrated_empirical_quantile(const EmpiricalDistribution& emp, double p) {
    if (!(p > 0.0 && p < 1.0))
        throw DomainError("integrated empirical quantile: p must lie in (0,1)");
    const auto& x = emp.sorted();
    double n = static_cast<double>(x.size());
    std::size_t k = emp.quantile_index(p);
    double hi = n * p;
    double lo = std::fma(n, p, -hi);
    // k - n*p, exact at step boundaries so the partial block vanishes there.
    double partial = (static_cast<double>(k) - hi) - lo;
    KahanSum tail;
    for (std::size_t i = k; i < x.size(); ++i) tail.add(x[i]);
    return (x[k - 1] * partial + tail.value()) / n;
}

double lower_integrated_empirical_quantile(const EmpiricalDistribution& emp,
                                           double p) {
    if (!(p > 0.0 && p < 1.0))
        throw DomainError("integrated empirical quantile: p must lie in (0,1)");
    const auto& x = emp.sorted();
    double n = static_cast<double>(x.size());
    std::size_t k = emp.quantile_index(p);
    double hi = n * p;
    double lo = std::fma(n, p, -hi);
    // n*p - (k-1), the width of the partial block below p.
    double partial = (hi - (static_cast<double>(k) - 1.0)) + lo;
    KahanSum head;
    for (std::size_t i = 0; i + 1 < k; ++i) head.add(x[i]);
    return (head.value() + x[k - 1] * partial) / n;
}

double empirical_es(const EmpiricalDistribution& emp, double p) {
    return integrated_empirical_quantile(emp, p) / (1.0 - p);
}

}  // namespace intquant
