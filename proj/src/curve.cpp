#include "frontal/curve.hpp"

#include "frontal/error.hpp"
#include "frontal/quadrature.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <utility>

namespace frontal {

namespace {

constexpr std::array<std::pair<Family, std::string_view>, 5> kFamilyNames{{
    {Family::circle, "circle"},
    {Family::ellipse, "ellipse"},
    {Family::hypocycloid, "hypocycloid"},
    {Family::eye, "eye"},
    {Family::model_cusp, "model-cusp"},
}};

double param(const Params& params, const std::string& key) {
    auto it = params.find(key);
    if (it == params.end()) throw Error(ErrorKind::spec, "missing parameter '" + key + "'");
    return it->second;
}

Params resolve_params(Family family, const Params& given) {
    Params defaults;
    switch (family) {
        case Family::circle: defaults = {{"r", 1.0}}; break;
        case Family::ellipse: defaults = {{"a", 2.0}, {"b", 1.0}}; break;
        case Family::hypocycloid: defaults = {{"m", 1.0}}; break;
        case Family::eye: defaults = {{"a", 1.0}}; break;
        case Family::model_cusp: break;
    }
    for (const auto& [key, value] : given) {
        if (!defaults.contains(key)) {
            throw Error(ErrorKind::spec, "unknown parameter '" + key + "' for family '" +
                                             std::string(family_name(family)) + "'");
        }
        if (!std::isfinite(value)) throw Error(ErrorKind::spec, "parameter '" + key + "' is not finite");
        defaults[key] = value;
    }

    switch (family) {
        case Family::circle:
            if (!(param(defaults, "r") > 0.0)) throw Error(ErrorKind::spec, "circle needs r > 0");
            break;
        case Family::ellipse:
            if (!(param(defaults, "a") > 0.0) || !(param(defaults, "b") > 0.0)) {
                throw Error(ErrorKind::spec, "ellipse needs a > 0 and b > 0");
            }
            break;
        case Family::hypocycloid: {
            const double m = param(defaults, "m");
            if (m < 1.0 || m != std::floor(m) || m > 1e6) {
                throw Error(ErrorKind::spec, "hypocycloid needs an integer m >= 1");
            }
            break;
        }
        case Family::eye:
            if (!(param(defaults, "a") > 0.0)) throw Error(ErrorKind::spec, "eye needs a > 0");
            break;
        case Family::model_cusp: break;
    }
    return defaults;
}

std::array<Taylor, 2> family_series(const FamilyBackend& fam, double t0) {
    const Taylor t = Taylor::variable(t0);
    switch (fam.family) {
        case Family::circle: {
            const double r = fam.params.at("r");
            Taylor s, c;
            sincos(t, s, c);
            return {r * c, r * s};
        }
        case Family::ellipse: {
            Taylor s, c;
            sincos(t, s, c);
            return {fam.params.at("a") * c, fam.params.at("b") * s};
        }
        case Family::hypocycloid: {
            const double m = fam.params.at("m");
            Taylor s1, c1, s2, c2;
            sincos((m + 1.0) * t, s1, c1);
            sincos(m * t, s2, c2);
            return {m * c1 + (m + 1.0) * c2, m * s1 - (m + 1.0) * s2};
        }
        case Family::eye: {
            const double a = fam.params.at("a");
            Taylor s, c, s3, c3, s2, c2;
            sincos(t, s, c);
            sincos(3.0 * t, s3, c3);
            sincos(2.0 * t, s2, c2);
            const Taylor denom = Taylor(5.0) - 3.0 * c2;
            return {(3.0 * c - c3) / denom, (4.0 * a) * (s * s * s) / denom};
        }
        case Family::model_cusp:
            return {t * t, t * t * t};
    }
    return {};
}

void check_order(int order) {
    if (order < 0 || order > kMaxJetOrder) {
        throw Error(ErrorKind::unsupported_order,
                    "jet order " + std::to_string(order) + " is outside 0.." + std::to_string(kMaxJetOrder));
    }
}

Vector rho_times_direction(const GeneratedBackend& g, double t) { return g.velocity(t); }

}  // namespace

std::string_view family_name(Family family) {
    for (const auto& [f, name] : kFamilyNames) {
        if (f == family) return name;
    }
    return "unknown";
}

std::optional<Family> parse_family(std::string_view name) {
    for (const auto& [f, n] : kFamilyNames) {
        if (n == name) return f;
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// GeneratedBackend

Vector GeneratedBackend::unit_direction(double t) const {
    const int n = dimension();
    if (angle) {
        const double theta = angle->slope * t + angle->periodic(t);
        return std::cos(theta) * angle->plane.col(0) + std::sin(theta) * angle->plane.col(1);
    }
    Vector v(n);
    for (int i = 0; i < n; ++i) v[i] = direction[static_cast<std::size_t>(i)](t);
    return v / v.norm();
}

Vector GeneratedBackend::velocity(double t) const { return rho(t) * unit_direction(t); }

std::vector<Taylor> GeneratedBackend::velocity_series(double t) const {
    const int n = dimension();
    const Taylor r = rho.taylor(t);
    std::vector<Taylor> out(static_cast<std::size_t>(n));
    if (angle) {
        const Taylor theta = angle->slope * Taylor::variable(t) + angle->periodic.taylor(t);
        Taylor s, c;
        sincos(theta, s, c);
        const Taylor rc = r * c;
        const Taylor rs = r * s;
        for (int i = 0; i < n; ++i) {
            out[static_cast<std::size_t>(i)] = rc * angle->plane(i, 0) + rs * angle->plane(i, 1);
        }
        return out;
    }
    std::vector<Taylor> v(static_cast<std::size_t>(n));
    Taylor norm2;
    for (int i = 0; i < n; ++i) {
        v[static_cast<std::size_t>(i)] = direction[static_cast<std::size_t>(i)].taylor(t);
        norm2 += v[static_cast<std::size_t>(i)] * v[static_cast<std::size_t>(i)];
    }
    const Taylor scale = r / sqrt(norm2);
    for (int i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = v[static_cast<std::size_t>(i)] * scale;
    return out;
}

// ---------------------------------------------------------------------------
// ClosedCurve

ClosedCurve::ClosedCurve(int dimension, Backend backend, bool periodic, double lo, double hi)
    : dimension_(dimension), backend_(std::move(backend)), periodic_(periodic), domain_lo_(lo),
      domain_hi_(hi) {}

const GeneratedBackend* ClosedCurve::generated() const {
    if (const auto* p = std::get_if<std::shared_ptr<const GeneratedBackend>>(&backend_)) return p->get();
    return nullptr;
}

void ClosedCurve::compute_scale() {
    constexpr int samples = 1024;
    std::vector<Vector> pts;
    pts.reserve(samples);
    const double span = domain_hi_ - domain_lo_;
    for (int i = 0; i < samples; ++i) {
        const double t = domain_lo_ + span * (periodic_ ? i / static_cast<double>(samples)
                                                        : i / static_cast<double>(samples - 1));
        pts.push_back(position(t));
    }
    double best = 0.0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) best = std::max(best, (pts[i] - pts[j]).squaredNorm());
    }
    scale_ = std::sqrt(best);
    if (!(scale_ > 0.0)) throw Error(ErrorKind::degenerate_curve, "curve image is a single point");
}

Vector ClosedCurve::position(double t) const {
    if (const auto* g = generated()) {
        const double tw = wrap_two_pi(t);
        const double h = kTwoPi / GeneratedBackend::kPanels;
        // Integrate from the nearest tabulated boundary; the piece is at most
        // half a panel wide, where 8 Gauss nodes are already exact to rounding.
        const int k = std::clamp(static_cast<int>(std::lround(tw / h)), 0, GeneratedBackend::kPanels);
        const double tk = h * k;
        Vector p = g->table[static_cast<std::size_t>(k)];
        if (tw != tk) {
            const auto& rule = quad::gauss_legendre_8();
            const double mid = 0.5 * (tk + tw);
            const double half = 0.5 * (tw - tk);
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                p += (rule.weights[i] * half) * g->velocity(mid + half * rule.nodes[i]);
            }
        }
        return p;
    }
    return eval_jet(t, 0)[0];
}

Vector ClosedCurve::velocity(double t) const {
    if (const auto* g = generated()) return g->velocity(t);
    return eval_jet(t, 1)[1];
}

Jet ClosedCurve::eval_jet(double t, int order) const { return jet_impl(t, order, true); }

Jet ClosedCurve::derivative_jet(double t, int order) const { return jet_impl(t, order, false); }

Jet ClosedCurve::jet_impl(double t, int order, bool with_position) const {
    check_order(order);
    Jet jet;
    jet.order = order;
    jet.values = Eigen::MatrixXd::Zero(dimension_, order + 1);

    if (const auto* f = std::get_if<FourierBackend>(&backend_)) {
        for (int i = 0; i < dimension_; ++i) {
            const TrigPoly& p = f->coords[static_cast<std::size_t>(i)];
            for (int j = 0; j <= order; ++j) jet.values(i, j) = p.derivative_at(t, j);
        }
        return jet;
    }
    if (const auto* fam = std::get_if<FamilyBackend>(&backend_)) {
        const auto series = family_series(*fam, t);
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j <= order; ++j) jet.values(i, j) = series[static_cast<std::size_t>(i)].derivative(
                static_cast<std::size_t>(j));
        }
        return jet;
    }
    const GeneratedBackend& g = *generated();
    jet.values.col(0).setConstant(std::numeric_limits<double>::quiet_NaN());
    if (with_position) jet.values.col(0) = position(t);
    if (order >= 1) {
        const auto series = g.velocity_series(t);
        for (int i = 0; i < dimension_; ++i) {
            for (int j = 1; j <= order; ++j) {
                jet.values(i, j) = series[static_cast<std::size_t>(i)].derivative(static_cast<std::size_t>(j - 1));
            }
        }
    }
    return jet;
}

Jet eval_jet(const ClosedCurve& curve, double t, int order) { return curve.eval_jet(t, order); }

// ---------------------------------------------------------------------------
// Factories

ClosedCurve make_family(std::string_view name, const Params& params, int dimension) {
    const auto family = parse_family(name);
    if (!family) throw Error(ErrorKind::spec, "unknown curve family '" + std::string(name) + "'");
    if (dimension < 2) throw Error(ErrorKind::spec, "curve dimension must be at least 2");
    FamilyBackend backend{*family, resolve_params(*family, params)};
    const bool germ = *family == Family::model_cusp;
    ClosedCurve curve(dimension, std::move(backend), !germ, germ ? -1.0 : 0.0, germ ? 1.0 : kTwoPi);
    curve.compute_scale();
    return curve;
}

ClosedCurve make_fourier(std::vector<TrigPoly> coords) {
    if (coords.empty()) throw Error(ErrorKind::spec, "fourier curve needs at least one coordinate");
    if (coords.size() < 2) throw Error(ErrorKind::spec, "curve dimension must be at least 2");
    bool moving = false;
    for (const auto& c : coords) {
        if (c.antiperiodic()) throw Error(ErrorKind::spec, "fourier coordinates must be 2pi-periodic");
        for (std::size_t k = 0; k < c.degree(); ++k) {
            if (c.cos_coeffs()[k] != 0.0 || c.sin_coeffs()[k] != 0.0) moving = true;
        }
    }
    if (!moving) throw Error(ErrorKind::spec, "constant curve has no regular points");
    const int n = static_cast<int>(coords.size());
    ClosedCurve curve(n, FourierBackend{std::move(coords)}, true, 0.0, kTwoPi);
    curve.compute_scale();
    return curve;
}

ClosedCurve make_generated(GeneratedBackend parts) {
    const int n = parts.dimension();
    if (n < 2) throw Error(ErrorKind::spec, "generated curve needs a base point of dimension >= 2");

    bool e_antiperiodic = false;
    if (parts.angle) {
        const double twice = 2.0 * parts.angle->slope;
        if (std::abs(twice - std::round(twice)) > 1e-12) {
            throw Error(ErrorKind::spec, "angle slope must be a multiple of 1/2");
        }
        e_antiperiodic = static_cast<long>(std::round(twice)) % 2 != 0;
        if (parts.angle->periodic.antiperiodic()) {
            throw Error(ErrorKind::spec, "periodic part of the angle must be 2pi-periodic");
        }
        if (parts.angle->plane.size() == 0 && n == 2) parts.angle->plane = Eigen::MatrixXd::Identity(2, 2);
        const Eigen::MatrixXd& u = parts.angle->plane;
        if (u.rows() != n || u.cols() != 2 ||
            (u.transpose() * u - Eigen::Matrix2d::Identity()).cwiseAbs().maxCoeff() > 1e-12) {
            throw Error(ErrorKind::spec, "angle plane must be two orthonormal columns of the curve dimension");
        }
        if (!parts.direction.empty()) throw Error(ErrorKind::spec, "give either an angle or a direction, not both");
    } else {
        if (parts.direction.size() != static_cast<std::size_t>(n)) {
            throw Error(ErrorKind::spec, "direction needs one trigonometric polynomial per coordinate");
        }
        e_antiperiodic = parts.direction.front().antiperiodic();
        for (const auto& d : parts.direction) {
            if (d.antiperiodic() != e_antiperiodic) {
                throw Error(ErrorKind::spec, "direction coordinates must share periodicity");
            }
        }
        constexpr int samples = 4096;
        for (int i = 0; i < samples; ++i) {
            const double t = kTwoPi * i / samples;
            Vector v(n);
            for (int k = 0; k < n; ++k) v[k] = parts.direction[static_cast<std::size_t>(k)](t);
            if (!(v.norm() > 1e-8)) throw Error(ErrorKind::spec, "direction field vanishes");
        }
    }
    if (parts.rho.antiperiodic() != e_antiperiodic) {
        throw Error(ErrorKind::spec, "rho must be antiperiodic exactly when the direction field is");
    }

    const double h = kTwoPi / GeneratedBackend::kPanels;
    parts.table.assign(GeneratedBackend::kPanels + 1, Vector::Zero(n));
    parts.table[0] = parts.base;
    const auto& g = parts;
    for (int k = 0; k < GeneratedBackend::kPanels; ++k) {
        const double a = h * k;
        const double b = (k + 1 == GeneratedBackend::kPanels) ? kTwoPi : h * (k + 1);
        Vector inc = Vector::Zero(n);
        const quad::Rule& rule = quad::gauss_legendre_16();
        const double mid = 0.5 * (a + b);
        const double half = 0.5 * (b - a);
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            inc += (rule.weights[i] * half) * rho_times_direction(g, mid + half * rule.nodes[i]);
        }
        parts.table[static_cast<std::size_t>(k + 1)] = parts.table[static_cast<std::size_t>(k)] + inc;
    }

    auto shared = std::make_shared<const GeneratedBackend>(std::move(parts));
    ClosedCurve curve(n, shared, true, 0.0, kTwoPi);
    curve.compute_scale();
    return curve;
}

}  // namespace frontal
