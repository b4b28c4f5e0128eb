#include "frontal/analysis.hpp"
#include "frontal/curve_spec.hpp"
#include "frontal/error.hpp"
#include "frontal/generator.hpp"
#include "frontal/report.hpp"
#include "frontal/verify.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace frontal;

constexpr int kExitFail = 1;
constexpr int kExitValidation = 2;
constexpr int kExitAccuracy = 3;

struct CurveSource {
    std::string spec;
    std::string family;
    std::vector<std::string> params;
    int dimension = 2;

    void attach(CLI::App* app) {
        app->add_option("spec", spec, "curve-spec JSON file");
        app->add_option("--family", family, "named family: circle, ellipse, hypocycloid, eye, model-cusp");
        app->add_option("--param", params, "family parameter key=value (repeatable)");
        app->add_option("--dimension", dimension, "embed a family curve in R^n")->check(CLI::Range(2, 64));
    }

    bool given() const { return !spec.empty() || !family.empty(); }

    ClosedCurve load() const {
        if (!spec.empty() && !family.empty()) throw Error(ErrorKind::spec, "give either a spec file or --family, not both");
        if (!spec.empty()) return load_curve(spec);
        if (family.empty()) throw Error(ErrorKind::spec, "no curve given (spec file or --family)");
        Params p;
        for (const auto& kv : params) {
            const auto eq = kv.find('=');
            if (eq == std::string::npos || eq == 0) throw Error(ErrorKind::spec, "--param expects key=value, got '" + kv + "'");
            std::size_t used = 0;
            double v = 0.0;
            try {
                v = std::stod(kv.substr(eq + 1), &used);
            } catch (const std::exception&) {
                used = 0;
            }
            if (used == 0 || used != kv.size() - eq - 1) {
                throw Error(ErrorKind::spec, "--param value is not a number in '" + kv + "'");
            }
            p[kv.substr(0, eq)] = v;
        }
        return make_family(family, p, dimension);
    }
};

double default_tolerance() {
    const char* env = std::getenv("FRONTAL_TOL");
    if (!env || !*env) return kDefaultTolerance;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (*end != '\0' || !(v > 0.0) || !std::isfinite(v)) throw Error(ErrorKind::spec, "FRONTAL_TOL must be a positive number");
    return v;
}

HalfInteger parse_index(const std::string& text) {
    const auto slash = text.find('/');
    if (slash != std::string::npos) {
        if (text.substr(slash + 1) != "2") throw Error(ErrorKind::spec, "index must be a multiple of 1/2");
        std::size_t used = 0;
        int twice = 0;
        try {
            twice = std::stoi(text.substr(0, slash), &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used == 0 || used != slash) throw Error(ErrorKind::spec, "cannot parse index '" + text + "'");
        return HalfInteger::from_twice(twice);
    }
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(text, &used);
    } catch (const std::exception&) {
        used = 0;
    }
    if (used == 0 || used != text.size()) throw Error(ErrorKind::spec, "cannot parse index '" + text + "'");
    const HalfInteger h = HalfInteger::nearest(v);
    if (h.value() != v) throw Error(ErrorKind::spec, "index must be a multiple of 1/2");
    return h;
}

void write_output(const std::string& path, const std::string& text) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw Error(ErrorKind::io, "cannot write '" + path + "'");
    out << text;
}

int exit_code_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::accuracy:
        case ErrorKind::frame_construction:
        case ErrorKind::pathological_curve:
        case ErrorKind::lift_inconsistency:
            return kExitAccuracy;
        default:
            return kExitValidation;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Total absolute curvature and cusp analysis of closed frontals"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(kToolVersion));

    std::optional<double> tol_flag;

    CLI::App* analyze_cmd = app.add_subcommand("analyze", "analyze one curve and print the JSON report");
    CurveSource analyze_src;
    analyze_src.attach(analyze_cmd);
    std::string analyze_out;
    bool no_topology = false;
    analyze_cmd->add_option("--tol", tol_flag, "quadrature tolerance (default 1e-9 or FRONTAL_TOL)");
    analyze_cmd->add_option("--out", analyze_out, "report path (default stdout)");
    analyze_cmd->add_flag("--no-topology", no_topology, "skip self-intersections and endpoint windows");

    CLI::App* render_cmd = app.add_subcommand("render", "write an SVG figure of a curve");
    CurveSource render_src;
    render_src.attach(render_cmd);
    RenderOptions render_opts;
    std::string svg_out;
    render_cmd->add_option("--svg", svg_out, "output SVG path")->required();
    render_cmd->add_option("--samples", render_opts.samples, "polyline samples")->check(CLI::Range(16, 1000000));
    render_cmd->add_flag("--mark-cusps", render_opts.mark_cusps, "mark singular points");
    render_cmd->add_flag("--show-indicatrix", render_opts.show_indicatrix, "draw the tangent indicatrix alongside");

    CLI::App* verify_cmd = app.add_subcommand("verify", "run theorem checks on a curve or a generated corpus");
    CurveSource verify_src;
    verify_src.attach(verify_cmd);
    std::string corpus;
    std::size_t count = 200;
    std::uint64_t seed = 7;
    std::string failure_dir = "frontal-failures";
    std::string verify_out;
    verify_cmd->add_option("--corpus", corpus, "corpus kind: n2, n2-monotone, n3");
    verify_cmd->add_option("--count", count, "corpus size")->check(CLI::PositiveNumber);
    verify_cmd->add_option("--seed", seed, "corpus seed");
    verify_cmd->add_option("--tol", tol_flag, "quadrature tolerance");
    verify_cmd->add_option("--failure-dir", failure_dir, "where failing curve specs are written");
    verify_cmd->add_option("--out", verify_out, "summary path (default stdout)");

    CLI::App* generate_cmd = app.add_subcommand("generate", "generate a random closed frontal as a curve spec");
    GeneratorSpec gen;
    std::string index_text = "1/2";
    bool non_monotone = false;
    std::string generate_out;
    generate_cmd->add_option("--dimension", gen.dimension, "ambient dimension")->check(CLI::Range(2, 64));
    generate_cmd->add_option("--index", index_text, "rotation index, a multiple of 1/2 (angle mode)");
    generate_cmd->add_flag("--co-orientable", gen.co_orientable, "n >= 3 direction mode: e(t + 2pi) = e(t)");
    generate_cmd->add_flag("--planar", gen.planar, "n >= 3: build the curve inside a random 2-plane");
    generate_cmd->add_option("--degree", gen.degree, "trigonometric degree")->check(CLI::Range(1, 64));
    generate_cmd->add_option("--amplitude", gen.amplitude, "angle perturbation size");
    generate_cmd->add_flag("--non-monotone", non_monotone, "let theta' change sign");
    generate_cmd->add_option("--seed", gen.seed, "random seed");
    generate_cmd->add_option("--out", generate_out, "spec path (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitValidation;
    }

    try {
        const double tol = tol_flag ? *tol_flag : default_tolerance();
        if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorKind::spec, "--tol must be positive");

        if (*analyze_cmd) {
            AnalysisOptions ao;
            ao.tol = tol;
            ao.topology = !no_topology;
            const AnalysisReport r = analyze(analyze_src.load(), ao);
            write_output(analyze_out, report_to_json(r).dump(2) + "\n");
            return 0;
        }
        if (*render_cmd) {
            write_output(svg_out, render_svg(render_src.load(), render_opts));
            return 0;
        }
        if (*verify_cmd) {
            if (!corpus.empty() && verify_src.given()) throw Error(ErrorKind::spec, "give either a curve or --corpus");
            if (!corpus.empty()) {
                const auto kind = parse_corpus_kind(corpus);
                if (!kind) throw Error(ErrorKind::spec, "unknown corpus '" + corpus + "'");
                CorpusOptions co;
                co.tol = tol;
                co.failure_dir = failure_dir;
                const CorpusSummary s = run_corpus(*kind, count, seed, co);
                write_output(verify_out, corpus_summary_json(s).dump(2) + "\n");
                return s.failures.empty() ? 0 : kExitFail;
            }
            AnalysisOptions ao;
            ao.tol = tol;
            const AnalysisReport r = analyze(verify_src.load(), ao);
            nlohmann::json doc;
            doc["K"] = r.K;
            doc["co_orientable"] = r.co_orientable;
            doc["verdicts"] = report_to_json(r)["verdicts"];
            write_output(verify_out, doc.dump(2) + "\n");
            return any_failed(r.verdicts) ? kExitFail : 0;
        }
        if (*generate_cmd) {
            gen.index = parse_index(index_text);
            gen.monotone = !non_monotone;
            write_output(generate_out, curve_to_json(generate(gen)).dump(2) + "\n");
            return 0;
        }
    } catch (const Error& e) {
        std::cerr << "frontal: " << to_string(e.kind()) << ": " << e.what() << '\n';
        return exit_code_for(e);
    } catch (const std::exception& e) {
        std::cerr << "frontal: " << e.what() << '\n';
        return kExitValidation;
    }
    return 0;
}
