#include "intquant/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "intquant/distributions.hpp"
#include "intquant/errors.hpp"
#include "intquant/gap.hpp"
#include "intquant/inference.hpp"
#include "intquant/io.hpp"
#include "intquant/riskmeasures.hpp"

namespace intquant {

namespace {

std::size_t env_threads() {
    const char* v = std::getenv("INTQUANT_THREADS");
    if (v == nullptr || *v == '\0') return 0;
    char* end = nullptr;
    long n = std::strtol(v, &end, 10);
    if (*end != '\0' || n < 0) {
        throw ParameterError("INTQUANT_THREADS must be a nonnegative integer");
    }
    return static_cast<std::size_t>(n);
}

double parse_double_or_throw(const std::string& token, const std::string& flag) {
    const char* s = token.c_str();
    char* end = nullptr;
    double v = std::strtod(s, &end);
    if (end == s || *end != '\0' || !std::isfinite(v)) {
        throw ParameterError(flag + ": not a number: '" + token + "'");
    }
    return v;
}

void require_prob(double v, const std::string& flag) {
    if (!(v > 0.0 && v < 1.0)) {
        throw ParameterError(flag + " must lie strictly inside (0, 1)");
    }
}

std::vector<std::size_t> parse_count_list(const std::string& spec,
                                          const std::string& flag) {
    std::vector<std::size_t> out;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ',')) {
        const char* s = token.c_str();
        char* end = nullptr;
        unsigned long long v = std::strtoull(s, &end, 10);
        if (end == s || *end != '\0' || v == 0) {
            throw ParameterError(flag + ": not a positive integer: '" + token +
                                 "'");
        }
        out.push_back(static_cast<std::size_t>(v));
    }
    if (out.empty()) throw ParameterError(flag + ": empty list");
    return out;
}

// ---- output plumbing -------------------------------------------------------

std::string json_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        switch (c) {
            case '"': out += "\\\""; break;
            case '\\': out += "\\\\"; break;
            case '\n': out += "\\n"; break;
            case '\t': out += "\\t"; break;
            default:
                if (static_cast<unsigned char>(c) < 0x20) {
                    char buf[8];
                    std::snprintf(buf, sizeof(buf), "\\u%04x", c);
                    out += buf;
                } else {
                    out += c;
                }
        }
    }
    return out;
}

std::string jnum(double v) {
    if (!std::isfinite(v)) return "null";
    return format_g12(v);
}

std::string jbool(bool b) { return b ? "true" : "false"; }

std::string jstr(const std::string& s) { return "\"" + json_escape(s) + "\""; }

std::string jwarnings(const std::vector<std::string>& w) {
    std::string out = "[";
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ",";
        out += jstr(w[i]);
    }
    return out + "]";
}

void write_payload(const std::string& payload, const std::string& out_path,
                   std::ostream& out) {
    if (out_path.empty()) {
        out << payload;
        return;
    }
    std::ofstream f(out_path, std::ios::binary);
    if (!f) throw DataError("cannot open output file: " + out_path);
    f << payload;
    if (!f) throw DataError("write failed: " + out_path);
}

std::string inference_json(const InferenceResult& r) {
    std::ostringstream os;
    os << "{\"estimate\":" << jnum(r.estimate)
       << ",\"std_error\":" << jnum(r.std_error)
       << ",\"ci_low\":" << jnum(r.ci_low) << ",\"ci_high\":" << jnum(r.ci_high)
       << ",\"level\":" << jnum(r.level) << ",\"n\":" << r.n
       << ",\"warnings\":" << jwarnings(r.warnings) << "}\n";
    return os.str();
}

std::string inference_csv(const InferenceResult& r) {
    std::ostringstream os;
    os << "estimate,std_error,ci_low,ci_high,level,n,warnings\n";
    std::string joined;
    for (std::size_t i = 0; i < r.warnings.size(); ++i) {
        if (i) joined += "; ";
        joined += r.warnings[i];
    }
    os << format_g12(r.estimate) << "," << format_g12(r.std_error) << ","
       << format_g12(r.ci_low) << "," << format_g12(r.ci_high) << ","
       << format_g12(r.level) << "," << r.n << ",\"" << joined << "\"\n";
    return os.str();
}

std::string report_fields_json(const GapReport& g) {
    std::ostringstream os;
    os << "\"p\":" << jnum(g.p);
    if (g.z.has_value()) os << ",\"z\":" << jnum(*g.z);
    os << ",\"value\":" << jnum(g.value) << ",\"lower\":" << jnum(g.lower_bound)
       << ",\"upper\":" << jnum(g.upper_bound)
       << ",\"applicable\":" << jbool(g.bounds_applicable);
    return os.str();
}

// Shared row shape for curve and surface CSV output; failed points keep
// their status but leave the numeric cells empty.
void csv_row(std::ostringstream& os, const GapReport& g, PointStatus status,
             bool with_z) {
    os << format_g12(g.p);
    if (with_z) os << "," << (g.z ? format_g12(*g.z) : "");
    if (status == PointStatus::Ok) {
        os << "," << format_g12(g.value) << "," << format_g12(g.lower_bound)
           << "," << format_g12(g.upper_bound) << ","
           << (g.bounds_applicable ? "true" : "false");
    } else {
        os << ",,,,false";
    }
    os << "," << to_string(status) << "\n";
}

// ---- per-command option bags ----------------------------------------------

struct CommonOpts {
    std::string out_path;
    std::string format;  // resolved per command when empty
};

std::string resolve_format(const std::string& requested,
                           const char* command_default) {
    if (requested.empty()) return command_default;
    return requested;
}

QuantileModel model_from_flags(const std::string& dist_spec,
                               const std::string& input_path) {
    if (!dist_spec.empty()) return parse_dist_spec(dist_spec);
    return QuantileModel(EmpiricalDistribution(read_losses_file(input_path)));
}

}  // namespace

std::vector<double> parse_grid(const std::string& spec,
                               const std::string& flag) {
    std::vector<std::string> parts;
    std::stringstream ss(spec);
    std::string token;
    while (std::getline(ss, token, ':')) parts.push_back(token);
    if (parts.size() != 3) {
        throw ParameterError(flag + ": expected start:stop:step, got '" + spec +
                             "'");
    }
    const double start = parse_double_or_throw(parts[0], flag);
    const double stop = parse_double_or_throw(parts[1], flag);
    const double step = parse_double_or_throw(parts[2], flag);
    if (!(step > 0.0)) throw ParameterError(flag + ": step must be positive");
    if (stop < start) throw ParameterError(flag + ": stop is below start");

    const double ratio = (stop - start) / step;
    const double rounded = std::round(ratio);
    std::vector<double> grid;
    if (std::abs(ratio - rounded) <= 1e-9 * std::max(1.0, std::abs(ratio))) {
        const std::size_t k = static_cast<std::size_t>(rounded);
        for (std::size_t i = 0; i < k; ++i) {
            grid.push_back(start + static_cast<double>(i) * step);
        }
        grid.push_back(stop);  // land exactly on the endpoint
    } else {
        const std::size_t k = static_cast<std::size_t>(std::floor(ratio + 1e-9));
        for (std::size_t i = 0; i <= k; ++i) {
            grid.push_back(start + static_cast<double>(i) * step);
        }
    }
    return grid;
}

namespace {

// ---- command implementations ----------------------------------------------

void run_es(const std::string& input, double p, double level,
            const std::string& variance, const std::string& f_spec,
            const CommonOpts& common, std::ostream& out) {
    require_prob(p, "--p");
    require_prob(level, "--level");
    const std::vector<double> sample = read_losses_file(input);
    VarianceSource source = PlugInVariance{};
    if (variance == "analytic") {
        if (f_spec.empty()) {
            throw ParameterError("--variance analytic needs --f for the model");
        }
        source = AnalyticVariance{parse_dist_spec(f_spec)};
    } else if (variance != "plugin") {
        throw ParameterError("--variance must be plugin or analytic");
    }
    const InferenceResult r = es_confidence_interval(sample, p, level, source);
    const std::string fmt = resolve_format(common.format, "json");
    write_payload(fmt == "csv" ? inference_csv(r) : inference_json(r),
                  common.out_path, out);
}

void run_gap(const std::string& f_spec, const std::string& g_spec,
             const std::string& input, double p, const std::string& p_grid,
             const CommonOpts& common, std::ostream& out) {
    if (f_spec.empty()) throw ParameterError("gap needs --f");
    if (g_spec.empty() == input.empty()) {
        throw ParameterError("gap needs exactly one of --g or --input");
    }
    const QuantileModel f = parse_dist_spec(f_spec);
    const QuantileModel g = model_from_flags(g_spec, input);

    std::vector<double> grid;
    if (!p_grid.empty()) {
        if (p >= 0.0) throw ParameterError("gap takes --p or --p-grid, not both");
        grid = parse_grid(p_grid, "--p-grid");
    } else {
        if (p < 0.0) throw ParameterError("gap needs --p or --p-grid");
        grid.push_back(p);
    }
    for (double v : grid) require_prob(v, "--p/--p-grid");

    const std::vector<CurvePoint> curve = gamma_curve(f, g, grid, env_threads());
    const std::string fmt = resolve_format(common.format, "csv");
    std::ostringstream os;
    if (fmt == "csv") {
        os << "p,value,lower,upper,applicable,status\n";
        for (const auto& pt : curve) {
            GapReport rep = pt.report;
            rep.p = pt.p;
            csv_row(os, rep, pt.status, false);
        }
    } else {
        os << "{\"points\":[";
        for (std::size_t i = 0; i < curve.size(); ++i) {
            if (i) os << ",";
            GapReport rep = curve[i].report;
            rep.p = curve[i].p;
            os << "{" << report_fields_json(rep)
               << ",\"status\":" << jstr(to_string(curve[i].status)) << "}";
        }
        os << "]}\n";
    }
    write_payload(os.str(), common.out_path, out);
}

void run_surface(const std::string& f_spec, const std::string& g_spec,
                 const std::string& input, const std::string& p_grid,
                 const std::string& z_grid, const CommonOpts& common,
                 std::ostream& out) {
    if (f_spec.empty()) throw ParameterError("surface needs --f");
    if (g_spec.empty() == input.empty()) {
        throw ParameterError("surface needs exactly one of --g or --input");
    }
    if (p_grid.empty() || z_grid.empty()) {
        throw ParameterError("surface needs --p-grid and --z-grid");
    }
    const QuantileModel f = parse_dist_spec(f_spec);
    const QuantileModel g = model_from_flags(g_spec, input);
    const std::vector<double> ps = parse_grid(p_grid, "--p-grid");
    for (double v : ps) require_prob(v, "--p-grid");
    const std::vector<double> zs = parse_grid(z_grid, "--z-grid");

    const std::vector<SurfacePoint> surf =
        delta_surface(f, g, ps, zs, env_threads());
    const std::string fmt = resolve_format(common.format, "csv");
    std::ostringstream os;
    if (fmt == "csv") {
        os << "p,z,value,lower,upper,applicable,status\n";
        for (const auto& pt : surf) {
            GapReport rep = pt.report;
            rep.p = pt.p;
            rep.z = pt.z;
            csv_row(os, rep, pt.status, true);
        }
    } else {
        os << "{\"points\":[";
        for (std::size_t i = 0; i < surf.size(); ++i) {
            if (i) os << ",";
            GapReport rep = surf[i].report;
            rep.p = surf[i].p;
            rep.z = surf[i].z;
            os << "{" << report_fields_json(rep)
               << ",\"status\":" << jstr(to_string(surf[i].status)) << "}";
        }
        os << "]}\n";
    }
    write_payload(os.str(), common.out_path, out);
}

void run_mc_coverage(const std::string& f_spec, std::size_t n, std::size_t reps,
                     double p, double level, std::uint64_t seed,
                     const std::string& variance, bool verbose,
                     const CommonOpts& common, std::ostream& out) {
    if (f_spec.empty()) throw ParameterError("mc-coverage needs --f");
    require_prob(p, "--p");
    require_prob(level, "--level");
    VarianceKind kind = VarianceKind::Analytic;
    if (variance == "plugin") {
        kind = VarianceKind::PlugIn;
    } else if (variance != "analytic") {
        throw ParameterError("--variance must be plugin or analytic");
    }
    const QuantileModel model = parse_dist_spec(f_spec);
    const CoverageReport r =
        mc_coverage_study(model, n, reps, p, level, seed, kind, env_threads());

    const std::string fmt = resolve_format(common.format, "json");
    std::ostringstream os;
    const char* vname = kind == VarianceKind::PlugIn ? "plugin" : "analytic";
    if (fmt == "csv") {
        if (verbose) {
            os << "rep,covered,width\n";
            for (std::size_t i = 0; i < r.reps; ++i) {
                os << i << "," << (r.covered[i] ? "true" : "false") << ","
                   << format_g12(r.widths[i]) << "\n";
            }
        } else {
            os << "n,reps,p,level,seed,variance,coverage,mean_width\n";
            os << r.n << "," << r.reps << "," << format_g12(r.p) << ","
               << format_g12(r.level) << "," << r.seed << "," << vname << ","
               << format_g12(r.coverage) << "," << format_g12(r.mean_width)
               << "\n";
        }
    } else {
        os << "{\"n\":" << r.n << ",\"reps\":" << r.reps
           << ",\"p\":" << jnum(r.p) << ",\"level\":" << jnum(r.level)
           << ",\"seed\":" << r.seed << ",\"variance\":" << jstr(vname)
           << ",\"coverage\":" << jnum(r.coverage)
           << ",\"mean_width\":" << jnum(r.mean_width);
        if (verbose) {
            os << ",\"replications\":[";
            for (std::size_t i = 0; i < r.reps; ++i) {
                if (i) os << ",";
                os << "{\"rep\":" << i
                   << ",\"covered\":" << jbool(r.covered[i] != 0)
                   << ",\"width\":" << jnum(r.widths[i]) << "}";
            }
            os << "]";
        }
        os << "}\n";
    }
    write_payload(os.str(), common.out_path, out);
}

void run_mc_remainder(const std::string& f_spec, const std::string& n_list,
                      std::size_t reps, double p, std::uint64_t seed,
                      bool verbose, const CommonOpts& common,
                      std::ostream& out) {
    if (f_spec.empty()) throw ParameterError("mc-remainder needs --f");
    require_prob(p, "--p");
    const std::vector<std::size_t> ns = parse_count_list(n_list, "--n-list");
    const QuantileModel model = parse_dist_spec(f_spec);
    const RemainderDecayReport r =
        mc_remainder_decay(model, ns, reps, p, seed, env_threads());

    const std::string fmt = resolve_format(common.format, "json");
    std::ostringstream os;
    if (fmt == "csv") {
        if (verbose) {
            os << "n,rep,scaled_gap\n";
            for (const auto& row : r.rows) {
                for (std::size_t i = 0; i < row.values.size(); ++i) {
                    os << row.n << "," << i << "," << format_g12(row.values[i])
                       << "\n";
                }
            }
        } else {
            os << "n,median_scaled_gap\n";
            for (const auto& row : r.rows) {
                os << row.n << "," << format_g12(row.median_scaled_gap) << "\n";
            }
        }
    } else {
        os << "{\"p\":" << jnum(r.p) << ",\"reps\":" << r.reps
           << ",\"seed\":" << r.seed
           << ",\"medians_decreasing\":" << jbool(r.medians_decreasing)
           << ",\"rows\":[";
        for (std::size_t j = 0; j < r.rows.size(); ++j) {
            if (j) os << ",";
            os << "{\"n\":" << r.rows[j].n << ",\"median_scaled_gap\":"
               << jnum(r.rows[j].median_scaled_gap);
            if (verbose) {
                os << ",\"values\":[";
                for (std::size_t i = 0; i < r.rows[j].values.size(); ++i) {
                    if (i) os << ",";
                    os << jnum(r.rows[j].values[i]);
                }
                os << "]";
            }
            os << "}";
        }
        os << "]}\n";
    }
    write_payload(os.str(), common.out_path, out);
}

void run_distortion(const std::string& f_spec, const std::string& input,
                    const std::string& measure, double level,
                    const CommonOpts& common, std::ostream& out) {
    if (measure.empty()) throw ParameterError("distortion needs --measure");
    if (f_spec.empty() == input.empty()) {
        throw ParameterError("distortion needs exactly one of --f or --input");
    }
    const SignedMeasure mu = parse_measure_spec(measure);
    const std::string fmt = resolve_format(common.format, "json");

    if (!f_spec.empty()) {
        const double value = distortion_risk(parse_dist_spec(f_spec), mu);
        std::ostringstream os;
        if (fmt == "csv") {
            os << "value,total_mass,total_variation\n"
               << format_g12(value) << "," << format_g12(mu.total_mass()) << ","
               << format_g12(mu.total_variation()) << "\n";
        } else {
            os << "{\"value\":" << jnum(value)
               << ",\"total_mass\":" << jnum(mu.total_mass())
               << ",\"total_variation\":" << jnum(mu.total_variation()) << "}\n";
        }
        write_payload(os.str(), common.out_path, out);
        return;
    }

    require_prob(level, "--level");
    const std::vector<double> sample = read_losses_file(input);
    const InferenceResult r = distortion_estimate(sample, mu, level);
    write_payload(fmt == "csv" ? inference_csv(r) : inference_json(r),
                  common.out_path, out);
}

void run_rvar(const std::string& f_spec, const std::string& input, double p,
              double q, const CommonOpts& common, std::ostream& out) {
    if (f_spec.empty() == input.empty()) {
        throw ParameterError("rvar needs exactly one of --f or --input");
    }
    require_prob(p, "--p");
    require_prob(q, "--q");
    const QuantileModel f = model_from_flags(f_spec, input);
    const double value = rvar(f, p, q);
    const std::string fmt = resolve_format(common.format, "json");
    std::ostringstream os;
    if (fmt == "csv") {
        os << "p,q,value\n"
           << format_g12(p) << "," << format_g12(q) << "," << format_g12(value)
           << "\n";
    } else {
        os << "{\"p\":" << jnum(p) << ",\"q\":" << jnum(q)
           << ",\"value\":" << jnum(value) << "}\n";
    }
    write_payload(os.str(), common.out_path, out);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Integrated quantile and tail risk toolkit"};
    app.require_subcommand(1);

    // Shared option storage; each subcommand registers only what it uses.
    std::string f_spec, g_spec, input, measure, p_grid, z_grid, n_list, variance;
    double p = -1.0, q = -1.0, level = 0.95;
    std::uint64_t seed = 1;
    std::size_t n = 0, reps = 0;
    bool verbose = false;
    CommonOpts common;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--out", common.out_path, "Write output to this file");
        cmd->add_option("--format", common.format, "Output format: csv or json")
            ->check(CLI::IsMember({"csv", "json"}));
    };

    CLI::App* es_cmd = app.add_subcommand(
        "es", "Expected Shortfall confidence interval from a loss file");
    es_cmd->add_option("--input", input, "Loss file, one value per line")
        ->required();
    es_cmd->add_option("--p", p, "Tail level in (0,1)")->required();
    es_cmd->add_option("--level", level, "Confidence level (default 0.95)");
    es_cmd->add_option("--variance", variance,
                       "Variance source: plugin (default) or analytic");
    es_cmd->add_option("--f", f_spec, "Model spec for the analytic variance");
    add_common(es_cmd);

    CLI::App* gap_cmd = app.add_subcommand(
        "gap", "Gap between integrated quantiles of two distributions");
    gap_cmd->add_option("--f", f_spec, "Reference model spec")->required();
    gap_cmd->add_option("--g", g_spec, "Comparison model spec");
    gap_cmd->add_option("--input", input, "Loss file for an empirical comparison");
    gap_cmd->add_option("--p", p, "Single tail level");
    gap_cmd->add_option("--p-grid", p_grid, "Grid start:stop:step of tail levels");
    add_common(gap_cmd);

    CLI::App* surf_cmd = app.add_subcommand(
        "surface", "Difference functional on a p x z grid with bounds");
    surf_cmd->add_option("--f", f_spec, "Reference model spec")->required();
    surf_cmd->add_option("--g", g_spec, "Comparison model spec");
    surf_cmd->add_option("--input", input, "Loss file for an empirical comparison");
    surf_cmd->add_option("--p-grid", p_grid, "Grid start:stop:step of tail levels");
    surf_cmd->add_option("--z-grid", z_grid, "Grid start:stop:step of thresholds");
    add_common(surf_cmd);

    CLI::App* cov_cmd = app.add_subcommand(
        "mc-coverage", "Monte Carlo coverage of the ES confidence interval");
    cov_cmd->add_option("--f", f_spec, "Model spec to simulate from")->required();
    cov_cmd->add_option("--n", n, "Sample size per replication")->required();
    cov_cmd->add_option("--reps", reps, "Number of replications")->required();
    cov_cmd->add_option("--p", p, "Tail level")->required();
    cov_cmd->add_option("--level", level, "Confidence level (default 0.95)");
    cov_cmd->add_option("--seed", seed, "Simulation seed (default 1)");
    cov_cmd->add_option("--variance", variance,
                        "Variance source: analytic (default) or plugin");
    cov_cmd->add_flag("--verbose", verbose, "Emit per-replication rows");
    add_common(cov_cmd);

    CLI::App* rem_cmd = app.add_subcommand(
        "mc-remainder", "Decay of the scaled remainder gap over sample sizes");
    rem_cmd->add_option("--f", f_spec, "Model spec to simulate from")->required();
    rem_cmd->add_option("--n-list", n_list, "Comma-separated sample sizes")
        ->required();
    rem_cmd->add_option("--reps", reps, "Replications per sample size")
        ->required();
    rem_cmd->add_option("--p", p, "Tail level")->required();
    rem_cmd->add_option("--seed", seed, "Simulation seed (default 1)");
    rem_cmd->add_flag("--verbose", verbose, "Emit per-replication rows");
    add_common(rem_cmd);

    CLI::App* dist_cmd = app.add_subcommand(
        "distortion", "Distortion risk measure of a model or a loss file");
    dist_cmd->add_option("--measure", measure,
                         "Measure spec atom:p,w;band:a,b,h")
        ->required();
    dist_cmd->add_option("--f", f_spec, "Model spec");
    dist_cmd->add_option("--input", input, "Loss file for estimation with CI");
    dist_cmd->add_option("--level", level, "Confidence level (default 0.95)");
    add_common(dist_cmd);

    CLI::App* rvar_cmd = app.add_subcommand(
        "rvar", "Range value-at-risk between two levels");
    rvar_cmd->add_option("--f", f_spec, "Model spec");
    rvar_cmd->add_option("--input", input, "Loss file");
    rvar_cmd->add_option("--p", p, "Lower level")->required();
    rvar_cmd->add_option("--q", q, "Upper level")->required();
    add_common(rvar_cmd);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 1;
    }

    try {
        if (es_cmd->parsed()) {
            run_es(input, p, level, variance.empty() ? "plugin" : variance,
                   f_spec, common, out);
        } else if (gap_cmd->parsed()) {
            run_gap(f_spec, g_spec, input, p, p_grid, common, out);
        } else if (surf_cmd->parsed()) {
            run_surface(f_spec, g_spec, input, p_grid, z_grid, common, out);
        } else if (cov_cmd->parsed()) {
            run_mc_coverage(f_spec, n, reps, p, level, seed,
                            variance.empty() ? "analytic" : variance, verbose,
                            common, out);
        } else if (rem_cmd->parsed()) {
            run_mc_remainder(f_spec, n_list, reps, p, seed, verbose, common,
                             out);
        } else if (dist_cmd->parsed()) {
            run_distortion(f_spec, input, measure, level, common, out);
        } else if (rvar_cmd->parsed()) {
            run_rvar(f_spec, input, p, q, common, out);
        }
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const ParameterError& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const DataError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    }
    return 0;
}

}  // namespace intquant
