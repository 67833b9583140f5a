#ifndef INTQUANT_RISKMEASURES_HPP
#define INTQUANT_RISKMEASURES_HPP

#include <string>
#include <vector>

#include "intquant/distributions.hpp"
#include "intquant/inference.hpp"

namespace intquant {

// ES_p(F) = integral of the quantile over (p, 1] divided by 1 - p.
double es(const QuantileModel& f, double p);

// Integral of the quantile over (0, p].
double lower_integrated_quantile(const QuantileModel& f, double p);

// Range value-at-risk: the quantile averaged over (p, q].  Finite for every
// model in the library regardless of tail moments, since it only reads the
// quantile on an interior interval.
double rvar(const QuantileModel& f, double p, double q);

struct MeasureAtom {
    double p = 0.0;
    double w = 0.0;
};

struct MeasureBand {
    double a = 0.0;
    double b = 0.0;
    double h = 0.0;
};

// Finite signed measure on (0, 1): point masses plus piecewise-constant
// density bands.  Atom locations and band edges must lie strictly inside
// (0, 1); support reaching 1 would weight an unbounded tail of ES levels and
// is rejected as a finiteness violation rather than a parameter typo.
class SignedMeasure {
public:
    SignedMeasure(std::vector<MeasureAtom> atoms, std::vector<MeasureBand> bands);

    const std::vector<MeasureAtom>& atoms() const { return atoms_; }
    const std::vector<MeasureBand>& bands() const { return bands_; }

    double total_mass() const;       // sum w + sum h (b - a)
    double total_variation() const;  // sum |w| + sum |h| (b - a)
    bool nonnegative() const;

private:
    std::vector<MeasureAtom> atoms_;
    std::vector<MeasureBand> bands_;
};

// "atom:p,w;band:a,b,h;..." with any number of components in any order.
SignedMeasure parse_measure_spec(const std::string& spec);

// The spectral weight induced by a measure,
//   phi(u) = integral over [0, u] of (1 - t)^{-1} dmu(t),
// stored exactly: on each segment between support points phi is
// value_at_start + height * log((1 - start) / (1 - u)).
class SpectralWeight {
public:
    struct Segment {
        double start = 0.0;
        double value_at_start = 0.0;
        double height = 0.0;  // summed band heights active on the segment
    };

    explicit SpectralWeight(std::vector<Segment> segments);

    double operator()(double u) const;  // u in (0, 1)
    const std::vector<Segment>& segments() const { return segments_; }
    double total() const;  // limit of phi at 1 (finite: support stays inside)

private:
    std::vector<Segment> segments_;
};

SpectralWeight spectral_weight_from_measure(const SignedMeasure& mu);

// rho_mu(F) = sum_atoms w ES_p(F) + sum_bands h integral_a^b ES_t(F) dt.
// Band integrals are exact block-by-block sums when F is empirical (the
// integrand is rational on each step of the quantile), quadrature otherwise.
// Equals integral_0^1 phi(u) F^{-1}(u) du for the induced spectral weight.
double distortion_risk(const QuantileModel& f, const SignedMeasure& mu);

// Central-limit interval for rho_mu from a sample.  The statistic flattens
// to a finite combination of pseudo-atoms (c_j, x_j) with x_j order
// statistics, so the influence of observation i is
//   Z_i = sum_j c_j ((x_i - x_j)_+ - mean((X - x_j)_+))
// and the standard error is sd(Z) / sqrt(n).  For a single unit atom this
// reproduces the plug-in ES interval exactly.
InferenceResult distortion_estimate(const std::vector<double>& sample,
                                    const SignedMeasure& mu, double level);

struct RuResult {
    double argmin = 0.0;
    double value = 0.0;
};

// Minimizes (1 - p) y + E(X - y)_+ over y.  The minimum value equals the
// integrated upper quantile and the minimizer is a p-quantile, which gives a
// derivative-free cross-check of the quantile integration path.
RuResult ru_es_crosscheck(const QuantileModel& f, double p);

}  // namespace intquant

#endif
