#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "intquant/distributions.hpp"
#include "intquant/errors.hpp"
#include "intquant/gap.hpp"
#include "intquant/inference.hpp"
#include "intquant/riskmeasures.hpp"
#include "intquant/variance.hpp"

namespace py = pybind11;
using namespace intquant;

namespace {

py::dict gap_dict(const GapReport& g) {
    py::dict d;
    d["value"] = g.value;
    d["lower"] = g.lower_bound;
    d["upper"] = g.upper_bound;
    d["applicable"] = g.bounds_applicable;
    d["p"] = g.p;
    if (g.z.has_value()) d["z"] = *g.z;
    return d;
}

py::dict inference_dict(const InferenceResult& r) {
    py::dict d;
    d["estimate"] = r.estimate;
    d["std_error"] = r.std_error;
    d["ci_low"] = r.ci_low;
    d["ci_high"] = r.ci_high;
    d["level"] = r.level;
    d["n"] = r.n;
    d["warnings"] = r.warnings;
    return d;
}

}  // namespace

PYBIND11_MODULE(_intquant, m) {
    m.doc() = "Integrated quantiles, tail risk measures, and gap functionals";

    py::class_<QuantileModel>(m, "Model")
        .def(py::init([](const std::string& spec) {
                 return parse_dist_spec(spec);
             }),
             py::arg("spec"))
        .def_static(
            "empirical",
            [](std::vector<double> values) {
                return QuantileModel(EmpiricalDistribution(std::move(values)));
            },
            py::arg("values"))
        .def("cdf", &QuantileModel::cdf, py::arg("x"))
        .def("quantile", &QuantileModel::quantile, py::arg("u"))
        .def("integrated_upper_quantile",
             &QuantileModel::integrated_upper_quantile, py::arg("p"))
        .def("lower_integrated_quantile",
             &QuantileModel::lower_integrated_quantile, py::arg("p"))
        .def("expected_excess", &QuantileModel::expected_excess, py::arg("x"))
        .def("sample", &QuantileModel::sample, py::arg("seed"), py::arg("n"));

    m.def(
        "es", [](const QuantileModel& f, double p) { return es(f, p); },
        py::arg("model"), py::arg("p"));
    m.def(
        "rvar",
        [](const QuantileModel& f, double p, double q) { return rvar(f, p, q); },
        py::arg("model"), py::arg("p"), py::arg("q"));
    m.def(
        "gamma",
        [](const QuantileModel& f, const QuantileModel& g, double p) {
            return gap_dict(gamma(f, g, p));
        },
        py::arg("f"), py::arg("g"), py::arg("p"));
    m.def(
        "gamma_star",
        [](const QuantileModel& f, const QuantileModel& g, double p) {
            return gap_dict(gamma_star(f, g, p));
        },
        py::arg("f"), py::arg("g"), py::arg("p"));
    m.def(
        "delta",
        [](const QuantileModel& f, const QuantileModel& g, double p, double z) {
            return gap_dict(delta(f, g, p, z));
        },
        py::arg("f"), py::arg("g"), py::arg("p"), py::arg("z"));
    m.def(
        "sigma2",
        [](const QuantileModel& f, double p, const std::string& method) {
            if (method == "double") return sigma2_double_integral(f, p).sigma2;
            if (method != "tail") {
                throw DomainError("method must be 'tail' or 'double'");
            }
            return sigma2_tail_variance(f, p).sigma2;
        },
        py::arg("model"), py::arg("p"), py::arg("method") = "tail");
    m.def(
        "es_interval",
        [](std::vector<double> sample, double p, double level,
           const std::string& variance, const QuantileModel* model) {
            VarianceSource src = PlugInVariance{};
            if (variance == "analytic") {
                if (model == nullptr) {
                    throw ParameterError(
                        "analytic variance needs the model argument");
                }
                src = AnalyticVariance{*model};
            } else if (variance != "plugin") {
                throw ParameterError("variance must be 'plugin' or 'analytic'");
            }
            return inference_dict(es_confidence_interval(sample, p, level, src));
        },
        py::arg("sample"), py::arg("p"), py::arg("level") = 0.95,
        py::arg("variance") = "plugin", py::arg("model") = nullptr);
    m.def(
        "distortion",
        [](const QuantileModel& f, const std::string& measure) {
            return distortion_risk(f, parse_measure_spec(measure));
        },
        py::arg("model"), py::arg("measure"));
    m.def(
        "distortion_interval",
        [](std::vector<double> sample, const std::string& measure,
           double level) {
            return inference_dict(
                distortion_estimate(sample, parse_measure_spec(measure), level));
        },
        py::arg("sample"), py::arg("measure"), py::arg("level") = 0.95);

    // Translators run newest-first, so the base class goes in first and the
    // derived ones shadow it.
    py::register_exception<Error>(m, "IntquantError", PyExc_RuntimeError);
    py::register_exception<DataError>(m, "DataError", PyExc_ValueError);
    py::register_exception<MomentError>(m, "MomentError", PyExc_ArithmeticError);
}
