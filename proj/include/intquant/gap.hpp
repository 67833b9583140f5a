#ifndef INTQUANT_GAP_HPP
#define INTQUANT_GAP_HPP

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "intquant/distributions.hpp"

namespace intquant {

// Result of a gap or difference evaluation together with its proven
// two-sided envelope.  When bounds_applicable is false the bound fields are
// still filled with the formula values but the enclosing inequality is not
// guaranteed (the reference cdf has an atom at the anchoring quantile).
struct GapReport {
    double value = 0.0;
    double lower_bound = 0.0;
    double upper_bound = 0.0;
    bool bounds_applicable = false;
    double p = 0.0;
    std::optional<double> z;
};

// Extended gap
//   gamma*_p(F,G) = integral_{F^-1(p)}^{G^-1(p)} (p - G(x)) dx,
// defined for every pair of models, moments or not, and always >= 0.
// The integral is an exact finite sum when G is empirical, adaptive
// quadrature split at cdf kinks otherwise.  Bounds: 0 and
// (F^-1(p) - G^-1(p)) * (G(x_p) - F(x_p)) with x_p = F^-1(p); they are
// guaranteed when F is continuous at x_p.
GapReport gamma_star(const QuantileModel& f, const QuantileModel& g, double p);

// Gap between the integrated upper quantiles and the matching tail-cdf
// difference.  Requires finite upper first moments on both sides; on that
// domain it coincides with gamma_star, which is how it is evaluated.
GapReport gamma(const QuantileModel& f, const QuantileModel& g, double p);

// Difference functional
//   delta_{p,z}(F,G) = integral_p^1 (F^-1 - G^-1) du - integral_z^inf (G - F) dx
// evaluated as gamma*_p(F,G) + integral_{F^-1(p)}^{z} (G - F) dx.  Requires
// finite upper first moments.  Bounds (valid for every such pair):
//   (F(z) - p)(F^-1(p) - z)  <=  delta  <=  (G(z) - p)(z - G^-1(p)).
GapReport delta(const QuantileModel& f, const QuantileModel& g, double p,
                double z);

// Closed forms for standard Lomax pairs (lambda = 1).
// delta_{p,z}(Lomax(a1,1), Lomax(a2,1)) for a1, a2 > 1 and z >= 0:
//   a1/(a1-1) s^{1-1/a1} - a2/(a2-1) s^{1-1/a2}
//   - (1+z)^{1-a1}/(a1-1) + (1+z)^{1-a2}/(a2-1),   s = 1 - p.
double lomax_delta_closed_form(double alpha1, double alpha2, double p, double z);

// gamma*_p(Lomax(a1,1), Lomax(a2,1)) for any a1 > 0 and a2 > 0, a2 != 1:
//   s^{(a1-1)/a1} + a2/(1-a2) s^{(a2-1)/a2} - 1/(1-a2) s^{(a2-1)/a1}.
// a2 == 1 raises SingularityError.
double lomax_gamma_closed_form(double alpha1, double alpha2, double p);

enum class PointStatus {
    Ok,
    MomentError,
    DomainError,
    SingularityError,
    NumericError,
    DataError,
    OtherError
};

const char* to_string(PointStatus s);

struct CurvePoint {
    double p = 0.0;
    GapReport report;
    PointStatus status = PointStatus::Ok;
    std::string message;
};

struct SurfacePoint {
    double p = 0.0;
    double z = 0.0;
    GapReport report;
    PointStatus status = PointStatus::Ok;
    std::string message;
};

// Evaluates the extended gap at every p in the grid (identical to gamma on
// pairs with finite upper means).  Per-point failures are recorded in the
// row's status instead of aborting the sweep.
std::vector<CurvePoint> gamma_curve(const QuantileModel& f,
                                    const QuantileModel& g,
                                    const std::vector<double>& p_grid,
                                    std::size_t threads = 0);

// Evaluates delta on the full p x z grid, row-major with p outermost.  The
// moment precondition is checked once up front; per-point failures are
// flagged rows.
std::vector<SurfacePoint> delta_surface(const QuantileModel& f,
                                        const QuantileModel& g,
                                        const std::vector<double>& p_grid,
                                        const std::vector<double>& z_grid,
                                        std::size_t threads = 0);

}  // namespace intquant

#endif
