#include "intquant/distributions.hpp"

#include <cmath>
#include <cstdlib>
#include <string>
#include <utility>

#include "intquant/errors.hpp"
#include "intquant/numerics.hpp"
#include "intquant/rng.hpp"

namespace intquant {

namespace {

void check_prob_open(double p, const char* what) {
    if (!(p > 0.0 && p < 1.0))
        throw DomainError(std::string(what) + ": argument must lie in (0,1), got " +
                          std::to_string(p));
}

}  // namespace

// ---------------------------------------------------------------------------
// Lomax

Lomax::Lomax(double alpha, double lambda) : alpha_(alpha), lambda_(lambda) {
    if (!(alpha > 0.0) || !std::isfinite(alpha))
        throw ParameterError("lomax: alpha must be positive and finite");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw ParameterError("lomax: lambda must be positive and finite");
}

double Lomax::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    return 1.0 - std::pow(1.0 + x / lambda_, -alpha_);
}

double Lomax::quantile(double u) const {
    check_prob_open(u, "lomax quantile");
    return quantile_complement(1.0 - u);
}

double Lomax::quantile_complement(double s) const {
    return lambda_ * (std::pow(s, -1.0 / alpha_) - 1.0);
}

MomentClass Lomax::moment_class() const {
    return {alpha_ > 1.0, alpha_ > 2.0, true, true};
}

double Lomax::integrated_upper_quantile(double p) const {
    check_prob_open(p, "lomax integrated upper quantile");
    if (!(alpha_ > 1.0))
        throw MomentError("lomax: upper first moment requires alpha > 1");
    double s = 1.0 - p;
    return lambda_ *
           (alpha_ / (alpha_ - 1.0) * std::pow(s, (alpha_ - 1.0) / alpha_) - s);
}

double Lomax::lower_integrated_quantile(double p) const {
    check_prob_open(p, "lomax lower integrated quantile");
    double s = 1.0 - p;
    if (alpha_ == 1.0) return lambda_ * (-std::log(s) - p);
    return lambda_ * (alpha_ / (alpha_ - 1.0) *
                          (1.0 - std::pow(s, (alpha_ - 1.0) / alpha_)) -
                      p);
}

double Lomax::expected_excess(double x) const {
    if (!(alpha_ > 1.0))
        throw MomentError("lomax: expected excess requires alpha > 1");
    double mean = lambda_ / (alpha_ - 1.0);
    if (x <= 0.0) return mean - x;
    return lambda_ * std::pow(1.0 + x / lambda_, 1.0 - alpha_) / (alpha_ - 1.0);
}

double Lomax::expected_excess_square(double x) const {
    if (!(alpha_ > 2.0))
        throw MomentError("lomax: squared expected excess requires alpha > 2");
    double m1 = lambda_ / (alpha_ - 1.0);
    double m2 = 2.0 * lambda_ * lambda_ / ((alpha_ - 1.0) * (alpha_ - 2.0));
    if (x <= 0.0) return m2 - 2.0 * x * m1 + x * x;
    return 2.0 * lambda_ * lambda_ * std::pow(1.0 + x / lambda_, 2.0 - alpha_) /
           ((alpha_ - 1.0) * (alpha_ - 2.0));
}

// ---------------------------------------------------------------------------
// Exponential

Exponential::Exponential(double rate) : rate_(rate) {
    if (!(rate > 0.0) || !std::isfinite(rate))
        throw ParameterError("exp: rate must be positive and finite");
}

double Exponential::cdf(double x) const {
    if (x <= 0.0) return 0.0;
    return -std::expm1(-rate_ * x);
}

double Exponential::quantile(double u) const {
    check_prob_open(u, "exp quantile");
    return -std::log1p(-u) / rate_;
}

double Exponential::quantile_complement(double s) const {
    return -std::log(s) / rate_;
}

MomentClass Exponential::moment_class() const { return {true, true, true, true}; }

double Exponential::integrated_upper_quantile(double p) const {
    check_prob_open(p, "exp integrated upper quantile");
    double s = 1.0 - p;
    return s * (1.0 - std::log(s)) / rate_;
}

double Exponential::lower_integrated_quantile(double p) const {
    check_prob_open(p, "exp lower integrated quantile");
    double s = 1.0 - p;
    return (1.0 - s * (1.0 - std::log(s))) / rate_;
}

double Exponential::expected_excess(double x) const {
    if (x <= 0.0) return 1.0 / rate_ - x;
    return std::exp(-rate_ * x) / rate_;
}

double Exponential::expected_excess_square(double x) const {
    if (x <= 0.0) {
        double d = 1.0 / rate_ - x;
        return 1.0 / (rate_ * rate_) + d * d;
    }
    return 2.0 * std::exp(-rate_ * x) / (rate_ * rate_);
}

// ---------------------------------------------------------------------------
// Uniform

Uniform::Uniform(double a, double b) : a_(a), b_(b) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(b > a))
        throw ParameterError("uniform: requires finite endpoints with b > a");
}

double Uniform::cdf(double x) const {
    if (x <= a_) return 0.0;
    if (x >= b_) return 1.0;
    return (x - a_) / (b_ - a_);
}

double Uniform::quantile(double u) const {
    check_prob_open(u, "uniform quantile");
    return a_ + u * (b_ - a_);
}

double Uniform::quantile_complement(double s) const { return b_ - s * (b_ - a_); }

MomentClass Uniform::moment_class() const { return {true, true, true, true}; }

double Uniform::integrated_upper_quantile(double p) const {
    check_prob_open(p, "uniform integrated upper quantile");
    return a_ * (1.0 - p) + 0.5 * (b_ - a_) * (1.0 - p * p);
}

double Uniform::lower_integrated_quantile(double p) const {
    check_prob_open(p, "uniform lower integrated quantile");
    return a_ * p + 0.5 * (b_ - a_) * p * p;
}

double Uniform::expected_excess(double x) const {
    if (x >= b_) return 0.0;
    if (x <= a_) return 0.5 * (a_ + b_) - x;
    double d = b_ - x;
    return 0.5 * d * d / (b_ - a_);
}

double Uniform::expected_excess_square(double x) const {
    if (x >= b_) return 0.0;
    double db = b_ - x;
    if (x <= a_) {
        double da = a_ - x;
        return (db * db * db - da * da * da) / (3.0 * (b_ - a_));
    }
    return db * db * db / (3.0 * (b_ - a_));
}

// ---------------------------------------------------------------------------
// Normal

Normal::Normal(double mu, double sigma) : mu_(mu), sigma_(sigma) {
    if (!std::isfinite(mu))
        throw ParameterError("normal: mu must be finite");
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw ParameterError("normal: sigma must be positive and finite");
}

double Normal::cdf(double x) const { return normal_cdf((x - mu_) / sigma_); }

double Normal::quantile(double u) const {
    check_prob_open(u, "normal quantile");
    return mu_ + sigma_ * normal_quantile(u);
}

double Normal::quantile_complement(double s) const {
    return mu_ - sigma_ * normal_quantile(s);
}

MomentClass Normal::moment_class() const { return {true, true, true, true}; }

double Normal::integrated_upper_quantile(double p) const {
    check_prob_open(p, "normal integrated upper quantile");
    double t0 = -std::log1p(-p);
    auto f = [this](double t) {
        double s = std::exp(-t);
        return quantile_complement(s) * s;
    };
    return integrate_to_infinity(f, t0, 1e-10);
}

double Normal::lower_integrated_quantile(double p) const {
    check_prob_open(p, "normal lower integrated quantile");
    double t0 = -std::log(p);
    auto f = [this](double t) {
        double s = std::exp(-t);
        return (mu_ + sigma_ * normal_quantile(s)) * s;
    };
    return integrate_to_infinity(f, t0, 1e-10);
}

double Normal::expected_excess(double x) const {
    double z = (x - mu_) / sigma_;
    return sigma_ * (normal_pdf(z) - z * normal_cdf(-z));
}

double Normal::expected_excess_square(double x) const {
    double z = (x - mu_) / sigma_;
    return sigma_ * sigma_ * ((1.0 + z * z) * normal_cdf(-z) - z * normal_pdf(z));
}

// ---------------------------------------------------------------------------
// QuantileModel

ModelKind QuantileModel::kind() const {
    struct V {
        ModelKind operator()(const Lomax&) { return ModelKind::Lomax; }
        ModelKind operator()(const Exponential&) { return ModelKind::Exponential; }
        ModelKind operator()(const Uniform&) { return ModelKind::Uniform; }
        ModelKind operator()(const Normal&) { return ModelKind::Normal; }
        ModelKind operator()(const EmpiricalDistribution&) {
            return ModelKind::Empirical;
        }
    };
    return std::visit(V{}, impl_);
}

double QuantileModel::cdf(double x) const {
    return std::visit([x](const auto& m) { return m.cdf(x); }, impl_);
}

double QuantileModel::quantile(double u) const {
    return std::visit([u](const auto& m) { return m.quantile(u); }, impl_);
}

double QuantileModel::quantile_complement(double s) const {
    return std::visit(
        [s](const auto& m) -> double {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>,
                                         EmpiricalDistribution>) {
                return m.quantile(1.0 - s);
            } else {
                return m.quantile_complement(s);
            }
        },
        impl_);
}

MomentClass QuantileModel::moment_class() const {
    return std::visit(
        [](const auto& m) -> MomentClass {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>,
                                         EmpiricalDistribution>) {
                return {true, true, true, true};
            } else {
                return m.moment_class();
            }
        },
        impl_);
}

double QuantileModel::integrated_upper_quantile(double p) const {
    return std::visit(
        [p](const auto& m) -> double {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>,
                                         EmpiricalDistribution>) {
                return integrated_empirical_quantile(m, p);
            } else {
                return m.integrated_upper_quantile(p);
            }
        },
        impl_);
}

double QuantileModel::lower_integrated_quantile(double p) const {
    return std::visit(
        [p](const auto& m) -> double {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>,
                                         EmpiricalDistribution>) {
                return lower_integrated_empirical_quantile(m, p);
            } else {
                return m.lower_integrated_quantile(p);
            }
        },
        impl_);
}

double QuantileModel::expected_excess(double x) const {
    return std::visit(
        [x](const auto& m) -> double {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>,
                                         EmpiricalDistribution>) {
                KahanSum s;
                for (double v : m.sorted())
                    if (v > x) s.add(v - x);
                return s.value() / static_cast<double>(m.size());
            } else {
                return m.expected_excess(x);
            }
        },
        impl_);
}

double QuantileModel::expected_excess_square(double x) const {
    return std::visit(
        [x](const auto& m) -> double {
            if constexpr (std::is_same_v<std::decay_t<decltype(m)>,
                                         EmpiricalDistribution>) {
                KahanSum s;
                for (double v : m.sorted())
                    if (v > x) s.add((v - x) * (v - x));
                return s.value() / static_cast<double>(m.size());
            } else {
                return m.expected_excess_square(x);
            }
        },
        impl_);
}

bool QuantileModel::continuous_at(double x) const {
    if (const auto* emp = std::get_if<EmpiricalDistribution>(&impl_))
        return !emp->has_atom_at(x);
    return true;
}

std::vector<double> QuantileModel::cdf_breakpoints(double lo, double hi) const {
    std::vector<double> out;
    auto push = [&](double v) {
        if (v > lo && v < hi) out.push_back(v);
    };
    if (lo > hi) std::swap(lo, hi);
    switch (kind()) {
        case ModelKind::Lomax:
        case ModelKind::Exponential:
            push(0.0);
            break;
        case ModelKind::Uniform: {
            const auto& u = std::get<Uniform>(impl_);
            push(u.a());
            push(u.b());
            break;
        }
        case ModelKind::Normal:
            break;
        case ModelKind::Empirical: {
            for (double v : std::get<EmpiricalDistribution>(impl_).sorted()) {
                if (v >= hi) break;
                if (v > lo) out.push_back(v);
            }
            break;
        }
    }
    return out;
}

std::vector<double> QuantileModel::sample(std::uint64_t seed, std::size_t n) const {
    CounterRng rng(seed);
    std::vector<double> out(n);
    for (std::size_t i = 0; i < n; ++i) out[i] = quantile(rng.uniform(i));
    return out;
}

const EmpiricalDistribution* QuantileModel::as_empirical() const {
    return std::get_if<EmpiricalDistribution>(&impl_);
}

// ---------------------------------------------------------------------------
// Spec parsing

namespace {

double parse_number(const std::string& token, std::size_t position,
                    const std::string& spec) {
    const char* begin = token.c_str();
    char* end = nullptr;
    double v = std::strtod(begin, &end);
    if (token.empty() || end != begin + token.size() || !std::isfinite(v))
        throw ParameterError("distribution spec '" + spec +
                             "': invalid numeric parameter '" + token +
                             "' at position " + std::to_string(position));
    return v;
}

std::vector<double> parse_params(const std::string& body, std::size_t arity,
                                 const std::string& spec) {
    std::vector<std::string> tokens;
    std::size_t start = 0;
    while (true) {
        std::size_t comma = body.find(',', start);
        if (comma == std::string::npos) {
            tokens.push_back(body.substr(start));
            break;
        }
        tokens.push_back(body.substr(start, comma - start));
        start = comma + 1;
    }
    if (tokens.size() != arity)
        throw ParameterError("distribution spec '" + spec + "': expected " +
                             std::to_string(arity) + " parameter(s), got " +
                             std::to_string(tokens.size()));
    std::vector<double> out;
    for (std::size_t i = 0; i < tokens.size(); ++i)
        out.push_back(parse_number(tokens[i], i + 1, spec));
    return out;
}

}  // namespace

QuantileModel parse_dist_spec(const std::string& spec) {
    std::size_t colon = spec.find(':');
    if (colon == std::string::npos)
        throw ParseError("distribution spec '" + spec +
                         "': expected name:param[,param]");
    std::string name = spec.substr(0, colon);
    std::string body = spec.substr(colon + 1);
    if (name == "lomax") {
        auto v = parse_params(body, 2, spec);
        return QuantileModel(Lomax(v[0], v[1]));
    }
    if (name == "exp") {
        auto v = parse_params(body, 1, spec);
        return QuantileModel(Exponential(v[0]));
    }
    if (name == "uniform") {
        auto v = parse_params(body, 2, spec);
        return QuantileModel(Uniform(v[0], v[1]));
    }
    if (name == "normal") {
        auto v = parse_params(body, 2, spec);
        return QuantileModel(Normal(v[0], v[1]));
    }
    throw ParseError("distribution spec '" + spec + "': unknown name '" + name +
                     "'");
}

}  // namespace intquant
