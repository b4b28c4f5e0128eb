#include "frontal/report.hpp"

#include "frontal/error.hpp"
#include "frontal/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>

namespace frontal {

namespace {

using nlohmann::json;

template <class T>
json opt(const std::optional<T>& v) {
    return v ? json(*v) : json(nullptr);
}

json vec(const Vector& v) {
    json out = json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v[i]);
    return out;
}

const char* bound_kind(BoundKind k) {
    switch (k) {
        case BoundKind::regular_loop: return "regular_loop";
        case BoundKind::one_cusp: return "one_cusp";
        case BoundKind::two_cusps: return "two_cusps";
    }
    return "regular_loop";
}

}  // namespace

json report_to_json(const AnalysisReport& r) {
    json doc;
    doc["tool_version"] = kToolVersion;
    doc["units"] = "radians";
    doc["sign_convention"] = kSignConvention;
    doc["curve"] = r.curve_spec;
    doc["dimension"] = r.dimension;
    doc["scale"] = r.scale;
    doc["tolerance"] = r.tol;

    json sing = json::array();
    for (const auto& p : r.singular) {
        sing.push_back({{"t", p.t}, {"order", p.order}, {"is_cusp", p.is_cusp}, {"cusp_det", opt(p.cusp_det)}});
    }
    doc["singular_points"] = sing;
    doc["cusp_count"] = r.cusps;
    doc["all_cusps"] = r.all_cusps;
    doc["co_orientable"] = r.co_orientable;
    doc["max_continuity_gap"] = r.max_continuity_gap;

    if (r.index) {
        doc["rotation_index"] = {{"value", r.index->value()}, {"text", r.index->str()}};
    } else {
        doc["rotation_index"] = nullptr;
    }
    doc["theta_change"] = opt(r.theta_change);
    doc["total_absolute_curvature"] = {{"value", r.K}, {"error_estimate", r.K_error}};
    doc["indicatrix_length"] = r.indicatrix_length;
    doc["indicatrix_gap"] = std::abs(r.indicatrix_length - r.K);
    doc["l_convexity"] = r.l_convex ? json(std::string(to_string(*r.l_convex))) : json(nullptr);
    doc["sigma"] = opt(r.sigma);
    doc["oriented_total"] = opt(r.oriented_total);
    doc["planar"] = r.planar;
    doc["planarity_residual"] = r.planarity_residual;

    if (r.intersections) {
        json pairs = json::array();
        for (const auto& p : r.intersections->pairs) {
            pairs.push_back({{"a", p.a}, {"b", p.b}, {"point", vec(p.point)}, {"refinement_residual", p.refinement_residual}});
        }
        json unresolved = json::array();
        for (const auto& u : r.intersections->unresolved) {
            unresolved.push_back({{"a", u.a}, {"b", u.b}, {"reason", u.reason}});
        }
        doc["self_intersections"] = {{"pairs", pairs}, {"unresolved", unresolved}};
    } else {
        doc["self_intersections"] = nullptr;
    }
    doc["simplicity"] = r.simple ? json(std::string(to_string(*r.simple))) : json(nullptr);

    if (r.gauss_bonnet) {
        const auto& gb = *r.gauss_bonnet;
        doc["gauss_bonnet"] = {{"residual", gb.residual},
                               {"eta", gb.eta},
                               {"cusps", gb.cusps},
                               {"interior_angles", gb.interior_angles},
                               {"oriented_total", gb.oriented_total},
                               {"interior_left_total", gb.interior_left_total},
                               {"signed_area", gb.signed_area}};
    } else {
        doc["gauss_bonnet"] = nullptr;
    }

    json windows = json::array();
    for (const auto& w : r.windows) {
        const auto& s = w.window;
        const auto& b = w.bound;
        windows.push_back({{"pair", w.pair},
                           {"a", s.a},
                           {"b", s.b},
                           {"interior_cusps", s.interior_cusps},
                           {"interior_singular", s.interior_singular},
                           {"phi", s.phi},
                           {"K_segment", s.K_segment},
                           {"K_error", s.K_error},
                           {"epsilon_a", s.epsilon_a},
                           {"epsilon_b", s.epsilon_b},
                           {"bound",
                            {{"applicable", b.applicable},
                             {"kind", b.applicable ? json(bound_kind(b.kind)) : json(nullptr)},
                             {"value", b.bound},
                             {"margin", b.margin},
                             {"strict", b.strict},
                             {"pass", b.pass},
                             {"positive", b.positive},
                             {"note", b.note}}}});
    }
    doc["endpoint_windows"] = windows;

    doc["checks"] = {{"theta_prime_max_deviation", opt(r.theta_prime_max_deviation)},
                     {"theta_prime_samples", r.theta_prime_samples},
                     {"sgn_windows", r.sgn_windows},
                     {"sgn_violations", r.sgn_violations},
                     {"theta_integral_windows", r.theta_integral_windows},
                     {"theta_integral_min_margin", opt(r.theta_integral_min_margin)},
                     {"doubled_indicatrix_length", opt(r.doubled_length)},
                     {"great_circle_residual", opt(r.great_circle_residual)},
                     {"hyperspheres_crossed", opt(r.hyperspheres_crossed)}};

    json verdicts = json::array();
    for (const auto& v : r.verdicts) {
        verdicts.push_back({{"id", std::string(to_string(v.id))},
                            {"status", std::string(to_string(v.status))},
                            {"margin", v.margin},
                            {"details", v.details}});
    }
    doc["verdicts"] = verdicts;
    return doc;
}

namespace {

constexpr double kPanel = 400.0;
constexpr double kPad = 20.0;

struct Box {
    double x0 = std::numeric_limits<double>::infinity();
    double y0 = std::numeric_limits<double>::infinity();
    double x1 = -std::numeric_limits<double>::infinity();
    double y1 = -std::numeric_limits<double>::infinity();
    void add(double x, double y) {
        x0 = std::min(x0, x);
        y0 = std::min(y0, y);
        x1 = std::max(x1, x);
        y1 = std::max(y1, y);
    }
};

struct Mapper {
    double scale, cx, cy, ox;
    double x(double u) const { return ox + kPanel / 2 + scale * (u - cx); }
    double y(double v) const { return kPanel / 2 - scale * (v - cy); }
};

Mapper fit(const Box& b, double ox) {
    const double span = std::max({b.x1 - b.x0, b.y1 - b.y0, 1e-12});
    return {(kPanel - 2 * kPad) / span, 0.5 * (b.x0 + b.x1), 0.5 * (b.y0 + b.y1), ox};
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

std::string polyline(const std::vector<std::pair<double, double>>& pts, const Mapper& m, const char* style) {
    std::string s = "  <polyline fill=\"none\" " + std::string(style) + " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) s += ' ';
        s += fmt(m.x(pts[i].first)) + "," + fmt(m.y(pts[i].second));
    }
    s += "\"/>\n";
    return s;
}

}  // namespace

std::string render_svg(const ClosedCurve& curve, const RenderOptions& options) {
    const int n = curve.dimension();
    if (n > 3) throw Error(ErrorKind::dimension, "rendering supports dimension 2 and 3 only");
    if (options.samples < 16) throw Error(ErrorKind::spec, "render needs at least 16 samples");

    const double lo = curve.domain_lo();
    const double hi = curve.domain_hi();
    std::vector<std::pair<double, double>> pts;
    Box box;
    for (int i = 0; i <= options.samples; ++i) {
        const Vector p = curve.position(lo + (hi - lo) * i / options.samples);
        pts.push_back({p[0], p[1]});
        box.add(p[0], p[1]);
    }
    const Mapper m = fit(box, 0.0);
    const double width = options.show_indicatrix ? 2 * kPanel : kPanel;

    std::string svg = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(width) + "\" height=\"" + fmt(kPanel) +
           "\" viewBox=\"0 0 " + fmt(width) + " " + fmt(kPanel) + "\">\n";
    svg += "  <rect x=\"0\" y=\"0\" width=\"" + fmt(width) + "\" height=\"" + fmt(kPanel) + "\" fill=\"white\"/>\n";
    svg += polyline(pts, m, "stroke=\"black\" stroke-width=\"1.5\"");

    std::optional<FrontalFrame> frame;
    if (options.mark_cusps || options.show_indicatrix) frame.emplace(build_frame(curve));

    if (options.mark_cusps) {
        for (const auto& p : frame->singular_points()) {
            const Vector q = curve.position(p.t);
            const char* color = (n == 2 && p.is_cusp) ? "red" : "orange";
            svg += "  <circle cx=\"" + fmt(m.x(q[0])) + "\" cy=\"" + fmt(m.y(q[1])) + "\" r=\"4\" fill=\"" + color +
                   "\"/>\n";
        }
    }

    if (options.show_indicatrix) {
        Box unit;
        unit.add(-1.0, -1.0);
        unit.add(1.0, 1.0);
        const Mapper u = fit(unit, kPanel);
        svg += "  <circle cx=\"" + fmt(u.x(0.0)) + "\" cy=\"" + fmt(u.y(0.0)) + "\" r=\"" + fmt(u.scale) +
               "\" fill=\"none\" stroke=\"lightgray\"/>\n";
        std::vector<std::pair<double, double>> first;
        std::vector<std::pair<double, double>> second;
        for (int i = 0; i <= options.samples; ++i) {
            const double t = kTwoPi * i / options.samples;
            const Vector a = frame->e(t);
            first.push_back({a[0], a[1]});
            if (!frame->co_orientable()) {
                const Vector b = frame->e(t + kTwoPi);
                second.push_back({b[0], b[1]});
            }
        }
        svg += polyline(first, u, "stroke=\"steelblue\" stroke-width=\"1.5\"");
        if (!second.empty()) svg += polyline(second, u, "stroke=\"steelblue\" stroke-width=\"1\" stroke-dasharray=\"4 3\"");
    }
    svg += "</svg>\n";
    return svg;
}

}  // namespace frontal
