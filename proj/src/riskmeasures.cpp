#include "intquant/riskmeasures.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <utility>

#include "intquant/empirical.hpp"
#include "intquant/errors.hpp"
#include "intquant/numerics.hpp"
#include "intquant/variance.hpp"

namespace intquant {

namespace {

void check_prob(double p, const char* what) {
    if (!(p > 0.0 && p < 1.0)) {
        throw DomainError(std::string(what) + " must lie in (0, 1)");
    }
}

double parse_number(const std::string& token, const char* what) {
    const char* s = token.c_str();
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || !std::isfinite(v)) {
        throw ParameterError(std::string("invalid ") + what + " '" + token +
                             "' in measure spec");
    }
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::size_t pos = 0;
    while (true) {
        std::size_t next = s.find(sep, pos);
        if (next == std::string::npos) {
            out.push_back(s.substr(pos));
            return out;
        }
        out.push_back(s.substr(pos, next - pos));
        pos = next + 1;
    }
}

// log((1 - l) / (1 - r)) for l <= r < 1, formed to stay accurate as r -> 1.
double log_ratio(double l, double r) {
    return std::log1p((r - l) / (1.0 - r));
}

// Cumulative sums from the right: suffix[i] = sum of xs[i..n-1], suffix[n]=0.
std::vector<double> suffix_sums(const std::vector<double>& xs) {
    std::vector<double> suffix(xs.size() + 1, 0.0);
    KahanSum acc;
    for (std::size_t i = xs.size(); i-- > 0;) {
        acc.add(xs[i]);
        suffix[i] = acc.value();
    }
    return suffix;
}

}  // namespace

double es(const QuantileModel& f, double p) {
    check_prob(p, "tail level p");
    return f.integrated_upper_quantile(p) / (1.0 - p);
}

double lower_integrated_quantile(const QuantileModel& f, double p) {
    check_prob(p, "level p");
    return f.lower_integrated_quantile(p);
}

double rvar(const QuantileModel& f, double p, double q) {
    check_prob(p, "level p");
    check_prob(q, "level q");
    if (!(p < q)) throw DomainError("rvar needs p < q");
    return (f.lower_integrated_quantile(q) - f.lower_integrated_quantile(p)) /
           (q - p);
}

SignedMeasure::SignedMeasure(std::vector<MeasureAtom> atoms,
                             std::vector<MeasureBand> bands)
    : atoms_(std::move(atoms)), bands_(std::move(bands)) {
    for (const auto& a : atoms_) {
        if (!std::isfinite(a.w)) throw ParameterError("atom weight must be finite");
        if (!std::isfinite(a.p) || a.p <= 0.0) {
            throw ParameterError("atom location must lie in (0, 1)");
        }
        if (a.p >= 1.0) {
            throw FinitenessError("atom at or beyond level 1 has no finite ES");
        }
    }
    for (const auto& b : bands_) {
        if (!std::isfinite(b.h)) throw ParameterError("band height must be finite");
        if (!std::isfinite(b.a) || !std::isfinite(b.b) || b.a <= 0.0 || b.a >= b.b) {
            throw ParameterError("band needs 0 < a < b");
        }
        if (b.b >= 1.0) {
            throw FinitenessError("band reaching level 1 has no finite ES integral");
        }
    }
    std::vector<double> locs;
    for (const auto& a : atoms_) locs.push_back(a.p);
    std::sort(locs.begin(), locs.end());
    if (std::adjacent_find(locs.begin(), locs.end()) != locs.end()) {
        throw ParameterError("atom locations must be pairwise distinct");
    }
    std::vector<std::pair<double, double>> spans;
    for (const auto& b : bands_) spans.emplace_back(b.a, b.b);
    std::sort(spans.begin(), spans.end());
    for (std::size_t i = 1; i < spans.size(); ++i) {
        if (spans[i].first < spans[i - 1].second) {
            throw ParameterError("band intervals must not overlap");
        }
    }
}

double SignedMeasure::total_mass() const {
    KahanSum s;
    for (const auto& a : atoms_) s.add(a.w);
    for (const auto& b : bands_) s.add(b.h * (b.b - b.a));
    return s.value();
}

double SignedMeasure::total_variation() const {
    KahanSum s;
    for (const auto& a : atoms_) s.add(std::abs(a.w));
    for (const auto& b : bands_) s.add(std::abs(b.h) * (b.b - b.a));
    return s.value();
}

bool SignedMeasure::nonnegative() const {
    for (const auto& a : atoms_) {
        if (a.w < 0.0) return false;
    }
    for (const auto& b : bands_) {
        if (b.h < 0.0) return false;
    }
    return true;
}

SignedMeasure parse_measure_spec(const std::string& spec) {
    if (spec.empty()) throw ParseError("empty measure spec");
    std::vector<MeasureAtom> atoms;
    std::vector<MeasureBand> bands;
    for (const std::string& part : split(spec, ';')) {
        std::size_t colon = part.find(':');
        if (colon == std::string::npos) {
            throw ParseError("measure component '" + part +
                             "' is missing the kind: prefix");
        }
        const std::string kind = part.substr(0, colon);
        const std::vector<std::string> nums = split(part.substr(colon + 1), ',');
        if (kind == "atom") {
            if (nums.size() != 2) {
                throw ParameterError("atom takes two parameters p,w");
            }
            atoms.push_back({parse_number(nums[0], "atom location"),
                             parse_number(nums[1], "atom weight")});
        } else if (kind == "band") {
            if (nums.size() != 3) {
                throw ParameterError("band takes three parameters a,b,h");
            }
            bands.push_back({parse_number(nums[0], "band edge"),
                             parse_number(nums[1], "band edge"),
                             parse_number(nums[2], "band height")});
        } else {
            throw ParseError("unknown measure component '" + kind + "'");
        }
    }
    return SignedMeasure(std::move(atoms), std::move(bands));
}

SpectralWeight::SpectralWeight(std::vector<Segment> segments)
    : segments_(std::move(segments)) {}

double SpectralWeight::operator()(double u) const {
    check_prob(u, "argument u");
    // Last segment starting at or before u; phi vanishes left of the support.
    const Segment* seg = nullptr;
    for (const auto& s : segments_) {
        if (s.start <= u) seg = &s;
        else break;
    }
    if (seg == nullptr) return 0.0;
    return seg->value_at_start + seg->height * log_ratio(seg->start, u);
}

double SpectralWeight::total() const {
    if (segments_.empty()) return 0.0;
    // All bands close strictly inside (0,1), so the trailing height is zero
    // and phi is constant beyond the last support point.
    return segments_.back().value_at_start;
}

SpectralWeight spectral_weight_from_measure(const SignedMeasure& mu) {
    std::vector<double> events;
    for (const auto& a : mu.atoms()) events.push_back(a.p);
    for (const auto& b : mu.bands()) {
        events.push_back(b.a);
        events.push_back(b.b);
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    std::vector<SpectralWeight::Segment> segs;
    double value = 0.0;
    double height = 0.0;
    for (double e : events) {
        if (!segs.empty()) {
            value = segs.back().value_at_start +
                    segs.back().height * log_ratio(segs.back().start, e);
        }
        for (const auto& a : mu.atoms()) {
            if (a.p == e) value += a.w / (1.0 - a.p);
        }
        for (const auto& b : mu.bands()) {
            if (b.a == e) height += b.h;
            if (b.b == e) height -= b.h;
        }
        segs.push_back({e, value, height});
    }
    return SpectralWeight(std::move(segs));
}

namespace {

// Exact integral of ES_t over [a, b] against the empirical quantile: on each
// block ((k-1)/n, k/n] the integrand is (A - B t)/(1 - t) with
// A = x_(k) k/n + (1/n) sum_{i>k} x_(i) and B = x_(k), whose antiderivative
// is (A - B) log(1/(1-t)) + B t.
double empirical_band_integral(const EmpiricalDistribution& emp,
                               const std::vector<double>& suffix, double a,
                               double b) {
    const auto& xs = emp.sorted();
    const double n = static_cast<double>(xs.size());
    const std::size_t ks = emp.quantile_index(a);
    const std::size_t ke = emp.quantile_index(b);
    KahanSum acc;
    for (std::size_t k = ks; k <= ke; ++k) {
        const double lo = static_cast<double>(k - 1) / n;
        const double hi = static_cast<double>(k) / n;
        const double l = std::max(a, lo);
        const double r = std::min(b, hi);
        if (!(r > l)) continue;
        const double xk = xs[k - 1];
        const double mbar = (suffix[k] - (n - static_cast<double>(k)) * xk) / n;
        acc.add(mbar * log_ratio(l, r) + xk * (r - l));
    }
    return acc.value();
}

}  // namespace

double distortion_risk(const QuantileModel& f, const SignedMeasure& mu) {
    const bool has_mass = !mu.atoms().empty() || !mu.bands().empty();
    if (has_mass && !f.moment_class().finite_upper_first) {
        throw MomentError("distortion risk needs a finite upper first moment");
    }
    KahanSum total;
    for (const auto& a : mu.atoms()) {
        total.add(a.w * es(f, a.p));
    }
    if (mu.bands().empty()) return total.value();

    if (const EmpiricalDistribution* emp = f.as_empirical()) {
        const std::vector<double> suffix = suffix_sums(emp->sorted());
        for (const auto& b : mu.bands()) {
            total.add(b.h * empirical_band_integral(*emp, suffix, b.a, b.b));
        }
    } else {
        for (const auto& b : mu.bands()) {
            total.add(b.h * integrate([&](double t) { return es(f, t); }, b.a,
                                      b.b, 1e-10));
        }
    }
    return total.value();
}

InferenceResult distortion_estimate(const std::vector<double>& sample,
                                    const SignedMeasure& mu, double level) {
    check_prob(level, "confidence level");
    EmpiricalDistribution emp(sample);
    const std::size_t n = emp.size();
    if (n < 2) throw DataError("variance estimation needs at least two points");
    const auto& xs = emp.sorted();
    const std::vector<double> suffix = suffix_sums(xs);

    // The estimator is a finite combination of order statistics once the
    // measure is flattened against the empirical quantile: atoms map to
    // themselves, bands split at the blocks of the step quantile.  Each
    // pseudo-atom carries a weight c and anchors at x_(k).
    struct PseudoAtom {
        double c = 0.0;
        std::size_t k = 0;  // 1-based order statistic
    };
    std::vector<PseudoAtom> pseudo;
    for (const auto& a : mu.atoms()) {
        pseudo.push_back({a.w / (1.0 - a.p), emp.quantile_index(a.p)});
    }
    const double dn = static_cast<double>(n);
    for (const auto& b : mu.bands()) {
        const std::size_t ks = emp.quantile_index(b.a);
        const std::size_t ke = emp.quantile_index(b.b);
        for (std::size_t k = ks; k <= ke; ++k) {
            const double l = std::max(b.a, static_cast<double>(k - 1) / dn);
            const double r = std::min(b.b, static_cast<double>(k) / dn);
            if (!(r > l)) continue;
            pseudo.push_back({b.h * log_ratio(l, r), k});
        }
    }

    InferenceResult res;
    res.level = level;
    res.n = n;
    res.estimate = distortion_risk(QuantileModel(emp), mu);

    // Influence values Z_i = sum_j c_j ((x_i - x_j)_+ - mean excess at x_j).
    // Sorting the pseudo-atoms by anchor turns the positive parts into prefix
    // sums, so the whole influence vector costs O(n + J log J).
    std::sort(pseudo.begin(), pseudo.end(),
              [&](const PseudoAtom& u, const PseudoAtom& v) {
                  return xs[u.k - 1] < xs[v.k - 1];
              });
    KahanSum centre;  // sum_j c_j * mean((X - x_j)_+)
    for (const auto& pa : pseudo) {
        const double xref = xs[pa.k - 1];
        const double mbar =
            (suffix[pa.k] - (dn - static_cast<double>(pa.k)) * xref) / dn;
        centre.add(pa.c * mbar);
    }

    std::vector<double> z(n, 0.0);
    {
        KahanSum cw;   // sum of c over pseudo-atoms with anchor < x_i
        KahanSum cwx;  // matching sum of c * anchor
        std::size_t j = 0;
        for (std::size_t i = 0; i < n; ++i) {
            while (j < pseudo.size() && xs[pseudo[j].k - 1] < xs[i]) {
                cw.add(pseudo[j].c);
                cwx.add(pseudo[j].c * xs[pseudo[j].k - 1]);
                ++j;
            }
            z[i] = xs[i] * cw.value() - cwx.value() - centre.value();
        }
    }

    KahanSum zsum;
    for (double v : z) zsum.add(v);
    const double zmean = zsum.value() / dn;
    KahanSum sq;
    for (double v : z) sq.add((v - zmean) * (v - zmean));
    const double var = sq.value() / (dn - 1.0);

    if (n < 30) {
        res.warnings.push_back(
            "small sample (n < 30): the normal approximation may be poor");
    }
    // Levels within 1/n of either end are estimated from a handful of order
    // statistics; the CLT interval is produced anyway but flagged.
    double lo_support = 1.0;
    double hi_support = 0.0;
    for (const auto& a : mu.atoms()) {
        lo_support = std::min(lo_support, a.p);
        hi_support = std::max(hi_support, a.p);
    }
    for (const auto& b : mu.bands()) {
        lo_support = std::min(lo_support, b.a);
        hi_support = std::max(hi_support, b.b);
    }
    const double eps = 1.0 / dn;
    if (lo_support <= hi_support &&
        (lo_support < eps || hi_support > 1.0 - eps)) {
        res.warnings.push_back(
            "measure support within 1/n of the ends: few observations inform it");
    }
    if (var <= 0.0) {
        res.warnings.push_back(
            "variance is zero: the interval degenerates to a point");
    }

    res.std_error = std::sqrt(var / dn);
    const double zq = normal_quantile(0.5 * (1.0 + level));
    res.ci_low = res.estimate - zq * res.std_error;
    res.ci_high = res.estimate + zq * res.std_error;
    return res;
}

RuResult ru_es_crosscheck(const QuantileModel& f, double p) {
    check_prob(p, "tail level p");
    if (!f.moment_class().finite_upper_first) {
        throw MomentError("the variational form needs a finite upper first moment");
    }
    const Fn1 objective = [&](double y) {
        return (1.0 - p) * y + f.expected_excess(y);
    };
    double lo = f.quantile(std::max(0.5 * p, p - 0.2));
    double hi = f.quantile(std::min(0.5 + 0.5 * p, p + 0.2));
    if (!(hi > lo)) {
        lo -= 0.5;
        hi += 0.5;
    }
    const double x_tol = 1e-9 * (1.0 + std::abs(lo) + std::abs(hi));
    const auto [argmin, value] = golden_section_min(objective, lo, hi, x_tol);
    return {argmin, value};
}

}  // namespace intquant
