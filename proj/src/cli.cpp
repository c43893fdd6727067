#include "hbspace/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <stdexcept>
#include <utility>

#include "hbspace/errors.hpp"
#include "hbspace/kernels.hpp"
#include "hbspace/measures.hpp"
#include "hbspace/pathology.hpp"
#include "hbspace/quadrature.hpp"
#include "hbspace/spectral.hpp"
#include "hbspace/zerosets.hpp"

namespace hbspace::cli {

namespace {

using cplx = std::complex<double>;
using ordered_json = nlohmann::ordered_json;

// A problem with the invocation itself (flags, files); reported on stderr
// with exit code 2, as opposed to numeric_error (exit code 1).
struct usage_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

ordered_json complex_json(cplx z) {
    ordered_json j;
    j["re"] = z.real();
    j["im"] = z.imag();
    return j;
}

ordered_json quad_json(const QuadratureConfig& q) {
    ordered_json j;
    j["target_rel_error"] = q.target_rel_error;
    j["max_refinements"] = q.max_refinements;
    j["line_truncation_Y"] = q.line_truncation_Y;
    j["series_truncation_N"] = q.series_truncation_N;
    return j;
}

cplx parse_complex(const std::string& s, const std::string& flag) {
    const auto comma = s.find(',');
    if (comma == std::string::npos) {
        throw usage_error(flag + ": expected a complex literal of the form re,im");
    }
    const std::string re_s = s.substr(0, comma);
    const std::string im_s = s.substr(comma + 1);
    try {
        std::size_t p1 = 0;
        std::size_t p2 = 0;
        const double re = std::stod(re_s, &p1);
        const double im = std::stod(im_s, &p2);
        if (p1 != re_s.size() || p2 != im_s.size()) {
            throw usage_error(flag + ": malformed complex literal '" + s + "'");
        }
        return {re, im};
    } catch (const std::invalid_argument&) {
        throw usage_error(flag + ": malformed complex literal '" + s + "'");
    } catch (const std::out_of_range&) {
        throw usage_error(flag + ": complex literal out of range '" + s + "'");
    }
}

double parse_double(const std::string& s, const std::string& what) {
    try {
        std::size_t pos = 0;
        const double v = std::stod(s, &pos);
        if (pos != s.size()) throw usage_error(what + ": malformed number '" + s + "'");
        return v;
    } catch (const std::invalid_argument&) {
        throw usage_error(what + ": malformed number '" + s + "'");
    } catch (const std::out_of_range&) {
        throw usage_error(what + ": number out of range '" + s + "'");
    }
}

ordered_json read_json_file(const std::string& path, const char* what) {
    std::ifstream in(path);
    if (!in) {
        throw usage_error(std::string("cannot open ") + what + " file: " + path);
    }
    try {
        return ordered_json::parse(in);
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string("malformed ") + what + " file " + path + ": " +
                          e.what());
    }
}

BoundaryMeasure load_measure(const std::string& spec) {
    if (spec == "delta0") return BoundaryMeasure::point_mass_at_zero();
    if (spec.rfind("lebesgue:", 0) == 0) {
        const double upper = parse_double(spec.substr(9), "--measure lebesgue:UPPER");
        return BoundaryMeasure::lebesgue_truncated(upper);
    }
    const ordered_json j = read_json_file(spec, "measure");
    try {
        std::vector<BoundaryMeasure::Atom> atoms;
        if (j.contains("atoms")) {
            for (const auto& a : j.at("atoms")) {
                atoms.push_back({a.at("x").get<double>(), a.at("mass").get<double>()});
            }
        }
        std::vector<double> grid;
        std::vector<double> values;
        if (j.contains("density")) {
            grid = j.at("density").at("grid").get<std::vector<double>>();
            values = j.at("density").at("values").get<std::vector<double>>();
        }
        return BoundaryMeasure::make(std::move(atoms), std::move(grid),
                                     std::move(values));
    } catch (const nlohmann::json::exception& e) {
        throw usage_error("measure file " + spec + ": " + e.what());
    }
}

std::pair<std::vector<double>, std::vector<cplx>> load_sampled(const std::string& path,
                                                               const char* what) {
    const ordered_json j = read_json_file(path, what);
    try {
        auto grid = j.at("grid").get<std::vector<double>>();
        auto re = j.at("re").get<std::vector<double>>();
        auto im = j.at("im").get<std::vector<double>>();
        if (re.size() != grid.size() || im.size() != grid.size()) {
            throw usage_error(std::string(what) + " file " + path +
                              ": grid/re/im lengths differ");
        }
        std::vector<cplx> samples(grid.size());
        for (std::size_t i = 0; i < grid.size(); ++i) samples[i] = {re[i], im[i]};
        return {std::move(grid), std::move(samples)};
    } catch (const nlohmann::json::exception& e) {
        throw usage_error(std::string(what) + " file " + path + ": " + e.what());
    }
}

SpectralFunction load_spectral(const std::string& path) {
    auto [grid, samples] = load_sampled(path, "spectral");
    return SpectralFunction::make(std::move(grid), std::move(samples));
}

HalfLineFunction load_halfline(const std::string& path) {
    auto [grid, samples] = load_sampled(path, "half-line");
    return HalfLineFunction::make(std::move(grid), std::move(samples));
}

PointSequence load_sequence(const std::string& spec, long long count) {
    const auto generated = [&](const char* prefix) {
        return spec.rfind(prefix, 0) == 0;
    };
    if (generated("arith:") || generated("geom:")) {
        if (count <= 0) {
            throw usage_error("--count is required (and positive) with generator sequences");
        }
        const auto colon = spec.find(':');
        const double value = parse_double(spec.substr(colon + 1), "--seq");
        if (generated("arith:")) {
            return PointSequence::arithmetic(value, static_cast<std::size_t>(count));
        }
        return PointSequence::geometric(value, static_cast<std::size_t>(count));
    }
    std::ifstream in(spec);
    if (!in) throw usage_error("cannot open sequence file: " + spec);
    std::vector<cplx> pts;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        for (auto& ch : line) {
            if (ch == ',' || ch == ';' || ch == '\t') ch = ' ';
        }
        std::istringstream ls(line);
        double re = 0.0;
        double im = 0.0;
        if (!(ls >> re)) continue;  // blank line
        if (!(ls >> im)) {
            throw usage_error("sequence file " + spec + " line " +
                              std::to_string(line_no) + ": expected two columns (re im)");
        }
        pts.emplace_back(re, im);
    }
    return PointSequence::make(std::move(pts));
}

double rel_difference(double x, double y) {
    const double scale = std::max(std::abs(x), std::abs(y));
    if (scale == 0.0) return 0.0;
    return std::abs(x - y) / scale;
}

// ---- per-subcommand option bundles -----------------------------------------

struct KernelOpts {
    std::string space = "atomic";
    double a = 2.0;
    double rho = 1.0;
    std::string measure;
    std::string z;
    std::string w;
};

struct NormOpts {
    std::string spectral;
    double a = 2.0;
    double rho = 1.0;
    std::string route = "both";
};

struct PwCheckOpts {
    std::string spectral;
    std::string z;
};

struct MellinCheckOpts {
    std::string halfline;
    double a = 2.0;
    double rho = 1.0;
};

struct ZenKernelOpts {
    std::string measure;
    std::string z;
    std::string w;
};

struct ZerosetOpts {
    std::string seq;
    long long count = 0;
    double Rmax = 0.0;
    double rho1_tol = 0.05;
    double carleman_margin = 0.05;
    std::string csv;
};

struct PathologyOpts {
    std::string family;
    double p = 4.0;
    double a = 2.0;
    double rho = 1.0;
    std::string w = "1,0";
    int N = 60;
    int k = 1;
    std::string z;
    std::string csv;
};

struct DoublingOpts {
    std::string measure;
    double tmin = 0.0;
    double tmax = 0.0;
    int samples = 16;
    double R = 0.0;
};

// ---- handlers ---------------------------------------------------------------

ordered_json run_kernel(const KernelOpts& o, const QuadratureConfig& q,
                        ordered_json& echo) {
    const cplx z = parse_complex(o.z, "--z");
    const cplx w = parse_complex(o.w, "--w");
    echo["command"] = "kernel";
    echo["space"] = o.space;
    if (o.space == "atomic") {
        echo["a"] = o.a;
        echo["rho"] = o.rho;
    } else if (o.space == "zen") {
        if (o.measure.empty()) throw usage_error("--measure is required for --space zen");
        echo["measure"] = o.measure;
    }
    echo["z"] = complex_json(z);
    echo["w"] = complex_json(w);
    echo["quad"] = quad_json(q);

    KernelSpec spec = KernelSpec::make_hardy();
    if (o.space == "atomic") {
        spec = KernelSpec::make_atomic(o.a, o.rho);
    } else if (o.space == "zen") {
        spec = KernelSpec::make_zen(load_measure(o.measure), q);
    } else if (o.space == "bergman") {
        spec = KernelSpec::make_bergman();
    } else if (o.space != "hardy") {
        throw usage_error("--space must be one of atomic, zen, hardy, bergman");
    }

    ordered_json rep;
    rep["command_echo"] = echo;
    rep["results"]["value"] = complex_json(kernel_eval(z, w, spec));
    rep["warnings"] = ordered_json::array();
    return rep;
}

ordered_json run_norm(const NormOpts& o, const QuadratureConfig& q, ordered_json& echo) {
    echo["command"] = "norm";
    echo["spectral"] = o.spectral;
    echo["a"] = o.a;
    echo["rho"] = o.rho;
    echo["route"] = o.route;
    echo["quad"] = quad_json(q);
    if (o.route != "spectral" && o.route != "lines" && o.route != "both") {
        throw usage_error("--route must be one of spectral, lines, both");
    }
    const SpectralFunction psi = load_spectral(o.spectral);
    const AtomicParams params(o.a, o.rho);

    ordered_json rep;
    rep["command_echo"] = echo;
    ordered_json warnings = ordered_json::array();
    double norm_spectral = 0.0;
    double norm_lines = 0.0;
    if (o.route != "lines") {
        norm_spectral = norm_M_spectral(psi, params, q);
        rep["results"]["norm_spectral"] = norm_spectral;
    }
    if (o.route != "spectral") {
        const LineNormDiagnostics diag = norm_M_lines_diag(psi, params, q);
        norm_lines = diag.norm;
        rep["results"]["norm_lines"] = diag.norm;
        rep["results"]["line_terms_used"] = diag.terms_used;
        if (diag.truncation_warning) {
            warnings.push_back(
                "line-norm series hit the configured truncation length before its "
                "tail became negligible");
        }
    }
    if (o.route == "both") {
        rep["results"]["rel_difference"] = rel_difference(norm_spectral, norm_lines);
    }
    rep["warnings"] = warnings;
    return rep;
}

ordered_json run_pw_check(const PwCheckOpts& o, const QuadratureConfig& q,
                          ordered_json& echo) {
    const cplx z = parse_complex(o.z, "--z");
    echo["command"] = "pw-check";
    echo["spectral"] = o.spectral;
    echo["z"] = complex_json(z);
    echo["quad"] = quad_json(q);
    const SpectralFunction psi = load_spectral(o.spectral);

    ordered_json rep;
    rep["command_echo"] = echo;
    const cplx by_quadrature = pw_synthesize(psi, z, q);
    const cplx closed_form = pw_synthesize_closed(psi, z);
    rep["results"]["value_quadrature"] = complex_json(by_quadrature);
    rep["results"]["value_closed_form"] = complex_json(closed_form);
    rep["results"]["abs_difference"] = std::abs(by_quadrature - closed_form);
    rep["warnings"] = ordered_json::array();
    return rep;
}

ordered_json run_mellin_check(const MellinCheckOpts& o, const QuadratureConfig& q,
                              ordered_json& echo) {
    echo["command"] = "mellin-check";
    echo["halfline"] = o.halfline;
    echo["a"] = o.a;
    echo["rho"] = o.rho;
    echo["quad"] = quad_json(q);
    const HalfLineFunction phi = load_halfline(o.halfline);
    const AtomicParams params(o.a, o.rho);

    ordered_json rep;
    rep["command_echo"] = echo;
    const double direct = norm_halfline_weighted(phi, params, q);
    const double via_spectral = norm_M_spectral(mellin_to_spectral(phi), params, q);
    rep["results"]["norm_weighted_halfline"] = direct;
    rep["results"]["norm_spectral_image"] = via_spectral;
    rep["results"]["rel_difference"] = rel_difference(direct, via_spectral);
    rep["warnings"] = ordered_json::array();
    return rep;
}

ordered_json run_zen_kernel(const ZenKernelOpts& o, const QuadratureConfig& q,
                            ordered_json& echo) {
    const cplx z = parse_complex(o.z, "--z");
    const cplx w = parse_complex(o.w, "--w");
    echo["command"] = "zen-kernel";
    echo["measure"] = o.measure;
    echo["z"] = complex_json(z);
    echo["w"] = complex_json(w);
    echo["quad"] = quad_json(q);
    const BoundaryMeasure m = load_measure(o.measure);

    ordered_json rep;
    rep["command_echo"] = echo;
    rep["results"]["value"] = complex_json(kernel_zen(z, w, m, q));
    rep["warnings"] = ordered_json::array();
    return rep;
}

ordered_json run_zeroset(const ZerosetOpts& o, ordered_json& echo) {
    echo["command"] = "zeroset";
    echo["seq"] = o.seq;
    if (o.count > 0) echo["count"] = o.count;
    echo["Rmax"] = o.Rmax;
    echo["rho1_tol"] = o.rho1_tol;
    echo["carleman_margin"] = o.carleman_margin;
    const PointSequence seq = load_sequence(o.seq, o.count);

    ordered_json rep;
    rep["command_echo"] = echo;
    const DensityReport dr = classify(seq, o.Rmax, o.rho1_tol, o.carleman_margin);
    rep["results"]["rho1_estimate"] = dr.rho1_estimate;
    rep["results"]["d_plus"] = dr.d_plus;
    rep["results"]["d_minus"] = dr.d_minus;
    rep["results"]["eps0"] = dr.eps0;
    rep["results"]["carleman_ratio_at_Rmax"] = dr.carleman_samples.back().second;
    rep["results"]["verdict"] = to_string(dr.verdict);
    ordered_json samples = ordered_json::array();
    for (const auto& [R, ratio] : dr.carleman_samples) {
        ordered_json row;
        row["R"] = R;
        row["ratio"] = ratio;
        samples.push_back(row);
    }
    rep["series"]["carleman"] = samples;
    rep["warnings"] = ordered_json::array(
        {"all asymptotic quantities are finite-window estimates"});
    if (!o.csv.empty()) {
        Series s;
        s.columns = {"R", "ratio"};
        for (const auto& [R, ratio] : dr.carleman_samples) s.rows.push_back({R, ratio});
        emit_csv(s, o.csv);
    }
    return rep;
}

ordered_json run_pathology(const PathologyOpts& o, const QuadratureConfig& q,
                           ordered_json& echo) {
    echo["command"] = "pathology";
    echo["family"] = o.family;
    if (o.family == "projection") {
        const cplx w = parse_complex(o.w, "--w");
        echo["p"] = o.p;
        echo["a"] = o.a;
        echo["rho"] = o.rho;
        echo["w"] = complex_json(w);
        echo["N"] = o.N;
        echo["quad"] = quad_json(q);

        ordered_json rep;
        rep["command_echo"] = echo;
        const DivergenceSeries series =
            projection_partial_sums(o.p, AtomicParams(o.a, o.rho), w, o.N, q);
        rep["results"]["verdict"] = to_string(series.verdict);
        rep["results"]["log_partial_sum_final"] = series.partial_sums_log.back();
        ordered_json rows = ordered_json::array();
        for (std::size_t i = 0; i < series.terms.size(); ++i) {
            ordered_json row;
            row["n"] = series.terms[i].first;
            row["log_term"] = series.terms[i].second;
            row["log_partial_sum"] = series.partial_sums_log[i];
            rows.push_back(row);
        }
        rep["series"]["divergence"] = rows;
        rep["warnings"] = ordered_json::array();
        if (!o.csv.empty()) {
            Series s;
            s.columns = {"n", "log_term", "log_partial_sum"};
            for (std::size_t i = 0; i < series.terms.size(); ++i) {
                s.rows.push_back({static_cast<double>(series.terms[i].first),
                                  series.terms[i].second, series.partial_sums_log[i]});
            }
            emit_csv(s, o.csv);
        }
        return rep;
    }
    if (o.family == "counterexample") {
        echo["k"] = o.k;
        echo["N"] = o.N;
        if (!o.z.empty()) echo["z"] = complex_json(parse_complex(o.z, "--z"));
        echo["quad"] = quad_json(q);

        ordered_json rep;
        rep["command_echo"] = echo;
        rep["results"]["norm_sq"] = counterexample_fk_norm(o.k, o.N, q);
        {
            // Companion value: the series pi * sum 2^n/n! (1+kn/2)^{-2} that the
            // full-line norm would take; recorded alongside the truncated
            // quadrature value, no relation between the two is asserted.
            double closed = 0.0;
            double log_w = 0.0;  // log(2^n / n!)
            for (int n = 0; n <= o.N; ++n) {
                if (n > 0) log_w += std::log(2.0) - std::log(double(n));
                const double d = 1.0 + 0.5 * double(o.k) * double(n);
                closed += std::exp(log_w) / (d * d);
            }
            rep["results"]["norm_sq_displayed_closed_form"] =
                3.14159265358979323846 * closed;
        }
        if (!o.z.empty()) {
            const cplx z = parse_complex(o.z, "--z");
            rep["results"]["log_abs"] = counterexample_fk_log_abs(o.k, z);
            rep["results"]["value"] = complex_json(counterexample_fk(o.k, z));
        }
        rep["warnings"] = ordered_json::array();
        return rep;
    }
    if (o.family == "counterexample2") {
        if (o.z.empty()) throw usage_error("--z is required for --family counterexample2");
        const cplx z = parse_complex(o.z, "--z");
        echo["k"] = o.k;
        echo["z"] = complex_json(z);

        ordered_json rep;
        rep["command_echo"] = echo;
        rep["results"]["value"] = complex_json(counterexample2_fk(o.k, z));
        ordered_json warnings = ordered_json::array();
        try {
            rep["results"]["limit"] = complex_json(counterexample2_limit(z));
        } catch (const domain_error&) {
            warnings.push_back("pointwise limit omitted: z is not on a line Re z = n/2 "
                               "with Im z != 0");
        }
        rep["warnings"] = warnings;
        return rep;
    }
    throw usage_error("--family must be one of projection, counterexample, counterexample2");
}

ordered_json run_doubling(const DoublingOpts& o, ordered_json& echo) {
    echo["command"] = "doubling";
    echo["measure"] = o.measure;
    echo["tmin"] = o.tmin;
    echo["tmax"] = o.tmax;
    echo["samples"] = o.samples;
    echo["R"] = o.R;
    if (!(o.tmin > 0.0) || !(o.tmax > o.tmin)) {
        throw usage_error("doubling requires 0 < tmin < tmax");
    }
    if (o.samples < 2) throw usage_error("doubling requires --samples >= 2");
    const BoundaryMeasure m = load_measure(o.measure);
    std::vector<double> t_grid(o.samples);
    const double llo = std::log(o.tmin);
    const double lhi = std::log(o.tmax);
    for (int i = 0; i < o.samples; ++i) {
        t_grid[i] = std::exp(llo + (lhi - llo) * i / (o.samples - 1.0));
    }

    ordered_json rep;
    rep["command_echo"] = echo;
    const DoublingReport dr = check_doubling(m, t_grid, o.R);
    rep["results"]["sup_estimate"] = dr.sup_estimate;
    rep["results"]["pass"] = dr.pass;
    ordered_json rows = ordered_json::array();
    for (const auto& [t, ratio] : dr.ratio_samples) {
        ordered_json row;
        row["t"] = t;
        row["ratio"] = ratio;
        rows.push_back(row);
    }
    rep["series"]["ratios"] = rows;
    rep["warnings"] = ordered_json::array();
    return rep;
}

}  // namespace

void emit_csv(const Series& series, const std::string& path) {
    std::FILE* f = std::fopen(path.c_str(), "wb");
    if (f == nullptr) throw usage_error("cannot open CSV output file: " + path);
    for (std::size_t i = 0; i < series.columns.size(); ++i) {
        std::fprintf(f, "%s%s", i == 0 ? "" : ",", series.columns[i].c_str());
    }
    std::fprintf(f, "\n");
    for (const auto& row : series.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            std::fprintf(f, "%s%.17g", i == 0 ? "" : ",", row[i]);
        }
        std::fprintf(f, "\n");
    }
    if (std::fclose(f) != 0) throw usage_error("failed to write CSV output file: " + path);
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Numerical toolkit for holomorphic function spaces of exponential "
                 "growth on the right half-plane"};
    app.name("hbspace");
    app.require_subcommand(1);

    QuadratureConfig quad;
    const auto add_quad_flags = [&quad](CLI::App* sub) {
        sub->add_option("--target-rel-error", quad.target_rel_error,
                        "Adaptive quadrature relative error target");
        sub->add_option("--max-refinements", quad.max_refinements,
                        "Adaptive quadrature refinement cap");
        sub->add_option("--Y", quad.line_truncation_Y, "Vertical line truncation");
        sub->add_option("--N-series", quad.series_truncation_N,
                        "Series truncation length");
    };

    KernelOpts kernel_opts;
    CLI::App* kernel_cmd = app.add_subcommand("kernel", "Evaluate a reproducing kernel");
    kernel_cmd->add_option("--space", kernel_opts.space,
                           "Kernel family: atomic, zen, hardy, bergman");
    kernel_cmd->add_option("--a", kernel_opts.a, "Atomic weight base a > 0");
    kernel_cmd->add_option("--rho", kernel_opts.rho, "Atomic spacing rho > 0");
    kernel_cmd->add_option("--measure", kernel_opts.measure,
                           "Boundary measure (file, delta0, or lebesgue:UPPER)");
    kernel_cmd->add_option("--z", kernel_opts.z, "Evaluation point re,im")->required();
    kernel_cmd->add_option("--w", kernel_opts.w, "Kernel anchor re,im")->required();
    add_quad_flags(kernel_cmd);

    NormOpts norm_opts;
    CLI::App* norm_cmd =
        app.add_subcommand("norm", "Norm of a sampled spectral function");
    norm_cmd->add_option("--spectral", norm_opts.spectral, "Spectral function file")
        ->required();
    norm_cmd->add_option("--a", norm_opts.a, "Atomic weight base a > 0");
    norm_cmd->add_option("--rho", norm_opts.rho, "Atomic spacing rho > 0");
    norm_cmd->add_option("--route", norm_opts.route,
                         "Computation route: spectral, lines, both");
    add_quad_flags(norm_cmd);

    PwCheckOpts pw_opts;
    CLI::App* pw_cmd = app.add_subcommand(
        "pw-check", "Synthesize f(z) from a spectral function two ways");
    pw_cmd->add_option("--spectral", pw_opts.spectral, "Spectral function file")
        ->required();
    pw_cmd->add_option("--z", pw_opts.z, "Evaluation point re,im")->required();
    add_quad_flags(pw_cmd);

    MellinCheckOpts mellin_opts;
    CLI::App* mellin_cmd = app.add_subcommand(
        "mellin-check", "Compare half-line and spectral norms across the transform");
    mellin_cmd->add_option("--halfline", mellin_opts.halfline, "Half-line function file")
        ->required();
    mellin_cmd->add_option("--a", mellin_opts.a, "Atomic weight base a > 0");
    mellin_cmd->add_option("--rho", mellin_opts.rho, "Atomic spacing rho > 0");
    add_quad_flags(mellin_cmd);

    ZenKernelOpts zen_opts;
    CLI::App* zen_cmd =
        app.add_subcommand("zen-kernel", "Evaluate the kernel of a weighted Zen space");
    zen_cmd->add_option("--measure", zen_opts.measure,
                        "Boundary measure (file, delta0, or lebesgue:UPPER)")
        ->required();
    zen_cmd->add_option("--z", zen_opts.z, "Evaluation point re,im")->required();
    zen_cmd->add_option("--w", zen_opts.w, "Kernel anchor re,im")->required();
    add_quad_flags(zen_cmd);

    ZerosetOpts zeroset_opts;
    CLI::App* zeroset_cmd = app.add_subcommand(
        "zeroset", "Classify a point sequence as zero set / uniqueness set");
    zeroset_cmd
        ->add_option("--seq", zeroset_opts.seq,
                     "Sequence file, or generator arith:STEP / geom:BASE")
        ->required();
    zeroset_cmd->add_option("--count", zeroset_opts.count,
                            "Point count for generator sequences");
    zeroset_cmd->add_option("--Rmax", zeroset_opts.Rmax, "Carleman sweep endpoint")
        ->required();
    zeroset_cmd->add_option("--rho1-tol", zeroset_opts.rho1_tol,
                            "Tolerance on |rho1 - 1| for the zero-set rule");
    zeroset_cmd->add_option("--carleman-margin", zeroset_opts.carleman_margin,
                            "Margin over 2/pi for the uniqueness rule");
    zeroset_cmd->add_option("--csv", zeroset_opts.csv, "Write the Carleman sweep as CSV");

    PathologyOpts pathology_opts;
    CLI::App* pathology_cmd =
        app.add_subcommand("pathology", "Divergence series and counterexample families");
    pathology_cmd
        ->add_option("--family", pathology_opts.family,
                     "projection, counterexample, or counterexample2")
        ->required();
    pathology_cmd->add_option("--p", pathology_opts.p, "Norm exponent p >= 2");
    pathology_cmd->add_option("--a", pathology_opts.a, "Atomic weight base a > 0");
    pathology_cmd->add_option("--rho", pathology_opts.rho, "Atomic spacing rho > 0");
    pathology_cmd->add_option("--w", pathology_opts.w, "Kernel anchor re,im");
    pathology_cmd->add_option("--N", pathology_opts.N, "Series truncation");
    pathology_cmd->add_option("--k", pathology_opts.k, "Family index k >= 1");
    pathology_cmd->add_option("--z", pathology_opts.z, "Evaluation point re,im");
    pathology_cmd->add_option("--csv", pathology_opts.csv, "Write the series as CSV");
    add_quad_flags(pathology_cmd);

    DoublingOpts doubling_opts;
    CLI::App* doubling_cmd =
        app.add_subcommand("doubling", "Check the doubling condition of a measure");
    doubling_cmd
        ->add_option("--measure", doubling_opts.measure,
                     "Boundary measure (file, delta0, or lebesgue:UPPER)")
        ->required();
    doubling_cmd->add_option("--tmin", doubling_opts.tmin, "Smallest sampled t > 0")
        ->required();
    doubling_cmd->add_option("--tmax", doubling_opts.tmax, "Largest sampled t")
        ->required();
    doubling_cmd->add_option("--samples", doubling_opts.samples,
                             "Number of log-spaced sample points");
    doubling_cmd->add_option("--R", doubling_opts.R, "Doubling bound to check against")
        ->required();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(std::move(reversed));
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    ordered_json echo;
    try {
        ordered_json report;
        if (kernel_cmd->parsed()) {
            report = run_kernel(kernel_opts, quad, echo);
        } else if (norm_cmd->parsed()) {
            report = run_norm(norm_opts, quad, echo);
        } else if (pw_cmd->parsed()) {
            report = run_pw_check(pw_opts, quad, echo);
        } else if (mellin_cmd->parsed()) {
            report = run_mellin_check(mellin_opts, quad, echo);
        } else if (zen_cmd->parsed()) {
            report = run_zen_kernel(zen_opts, quad, echo);
        } else if (zeroset_cmd->parsed()) {
            report = run_zeroset(zeroset_opts, echo);
        } else if (pathology_cmd->parsed()) {
            report = run_pathology(pathology_opts, quad, echo);
        } else if (doubling_cmd->parsed()) {
            report = run_doubling(doubling_opts, echo);
        } else {
            err << "no subcommand selected\n";
            return 2;
        }
        out << report.dump(2) << "\n";
        return 0;
    } catch (const numeric_error& e) {
        ordered_json report;
        report["command_echo"] = echo;
        report["error"]["category"] = e.category();
        report["error"]["message"] = e.what();
        out << report.dump(2) << "\n";
        return 1;
    } catch (const usage_error& e) {
        err << e.what() << "\n";
        return 2;
    }
}

}  // namespace hbspace::cli
