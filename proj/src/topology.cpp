#include "frontal/topology.hpp"

#include "frontal/error.hpp"
#include "frontal/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace frontal {

namespace {

struct Segment {
    Eigen::Vector2d p;
    Eigen::Vector2d q;
    double xmin, xmax, ymin, ymax;
};

double circular_gap(double a, double b) {
    double d = std::fmod(std::abs(a - b), kTwoPi);
    return std::min(d, kTwoPi - d);
}

double cross(const Eigen::Vector2d& u, const Eigen::Vector2d& v) { return u.x() * v.y() - u.y() * v.x(); }

// Proper or touching crossing of two non-collinear segments; returns (u, v) on each.
std::optional<std::pair<double, double>> crossing(const Segment& s, const Segment& r) {
    const Eigen::Vector2d d1 = s.q - s.p;
    const Eigen::Vector2d d2 = r.q - r.p;
    const double denom = cross(d1, d2);
    if (denom == 0.0) return std::nullopt;
    const Eigen::Vector2d w = r.p - s.p;
    const double u = cross(w, d2) / denom;
    const double v = cross(w, d1) / denom;
    if (u < 0.0 || u > 1.0 || v < 0.0 || v > 1.0) return std::nullopt;
    return std::pair{u, v};
}

struct Refined {
    bool ok = false;
    double a = 0.0;
    double b = 0.0;
    double residual = 0.0;
    std::string reason;
};

Refined newton_refine(const ClosedCurve& curve, double a, double b) {
    const double target = 1e-10 * curve.scale();
    Refined out;
    for (int iter = 0; iter < 60; ++iter) {
        const Jet ja = curve.eval_jet(a, 1);
        const Jet jb = curve.eval_jet(b, 1);
        const Eigen::Vector2d f = (ja[0] - jb[0]).head<2>();
        const Eigen::Vector2d ga = ja[1].head<2>();
        const Eigen::Vector2d gb = jb[1].head<2>();
        out.residual = f.norm();
        Eigen::Matrix2d jac;
        jac.col(0) = ga;
        jac.col(1) = -gb;
        const double det = jac.determinant();
        const double size = ga.norm() * gb.norm();
        if (out.residual <= target && iter > 0) {
            out.ok = true;
            out.a = a;
            out.b = b;
            return out;
        }
        if (!(std::abs(det) > 1e-10 * size) || size == 0.0) {
            out.reason = "singular jacobian (tangential contact or singular point)";
            out.a = a;
            out.b = b;
            if (out.residual <= target) out.ok = true;
            return out;
        }
        const Eigen::Vector2d step = jac.inverse() * f;
        if (!(step.norm() < 0.5)) {
            out.reason = "newton step diverged";
            out.a = a;
            out.b = b;
            return out;
        }
        a -= step.x();
        b -= step.y();
    }
    out.a = a;
    out.b = b;
    out.ok = out.residual <= target;
    if (!out.ok) out.reason = "newton did not converge";
    return out;
}

}  // namespace

std::string_view to_string(Simplicity s) {
    switch (s) {
        case Simplicity::simple: return "simple";
        case Simplicity::not_simple: return "not_simple";
        case Simplicity::indeterminate: return "indeterminate";
    }
    return "indeterminate";
}

IntersectionCensus self_intersections(const ClosedCurve& curve) {
    if (curve.dimension() != 2) throw Error(ErrorKind::dimension, "self-intersections are computed for planar curves");
    if (!curve.is_periodic()) throw Error(ErrorKind::precondition, "self-intersections need a closed curve");

    constexpr int m = kPolylineSamples;
    const double h = kTwoPi / m;
    std::vector<Eigen::Vector2d> pts(m);
    for (int i = 0; i < m; ++i) pts[static_cast<std::size_t>(i)] = curve.position(h * i).head<2>();

    std::vector<Segment> segs(m);
    for (int i = 0; i < m; ++i) {
        const auto& p = pts[static_cast<std::size_t>(i)];
        const auto& q = pts[static_cast<std::size_t>((i + 1) % m)];
        segs[static_cast<std::size_t>(i)] = {p, q, std::min(p.x(), q.x()), std::max(p.x(), q.x()),
                                             std::min(p.y(), q.y()), std::max(p.y(), q.y())};
    }

    // Same candidate set as testing all pairs; sorting by xmin only prunes
    // pairs whose x-extents cannot overlap.
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) {
        return segs[static_cast<std::size_t>(x)].xmin < segs[static_cast<std::size_t>(y)].xmin;
    });

    struct Candidate {
        double a, b;
    };
    std::vector<Candidate> candidates;
    for (std::size_t oi = 0; oi < order.size(); ++oi) {
        const int i = order[oi];
        const Segment& s = segs[static_cast<std::size_t>(i)];
        for (std::size_t oj = oi + 1; oj < order.size(); ++oj) {
            const int j = order[oj];
            const Segment& r = segs[static_cast<std::size_t>(j)];
            if (r.xmin > s.xmax) break;
            const int gap = std::abs(i - j);
            if (gap <= 1 || gap == m - 1) continue;
            if (r.ymin > s.ymax || r.ymax < s.ymin) continue;
            const auto uv = crossing(s, r);
            if (!uv) continue;
            double a = h * (i + uv->first);
            double b = h * (j + uv->second);
            if (a > b) std::swap(a, b);
            candidates.push_back({a, b});
        }
    }

    IntersectionCensus census;
    for (const auto& c : candidates) {
        const Refined r = newton_refine(curve, c.a, c.b);
        if (!r.ok) {
            // Polyline chords near a cusp tip can cross where the curve does not.
            if (circular_gap(c.a, c.b) < 1e-2) continue;
            census.unresolved.push_back({c.a, c.b, r.reason});
            continue;
        }
        double a = wrap_two_pi(r.a);
        double b = wrap_two_pi(r.b);
        if (circular_gap(a, b) <= kSeparation) continue;
        if (a > b) std::swap(a, b);
        const bool dup = std::any_of(census.pairs.begin(), census.pairs.end(), [&](const auto& p) {
            return circular_gap(p.a, a) < 1e-6 && circular_gap(p.b, b) < 1e-6;
        });
        if (dup) continue;
        census.pairs.push_back({a, b, curve.position(a), r.residual});
    }
    std::sort(census.pairs.begin(), census.pairs.end(),
              [](const auto& x, const auto& y) { return std::pair{x.a, x.b} < std::pair{y.a, y.b}; });
    // Drop unresolved candidates that sit on a resolved pair.
    std::erase_if(census.unresolved, [&](const UnresolvedCandidate& u) {
        return std::any_of(census.pairs.begin(), census.pairs.end(), [&](const auto& p) {
            return circular_gap(p.a, u.a) < 1e-3 && circular_gap(p.b, u.b) < 1e-3;
        });
    });
    return census;
}

Simplicity simplicity(const IntersectionCensus& census) {
    if (!census.pairs.empty()) return Simplicity::not_simple;
    if (!census.unresolved.empty()) return Simplicity::indeterminate;
    return Simplicity::simple;
}

Simplicity is_simple(const ClosedCurve& curve) { return simplicity(self_intersections(curve)); }

SegmentWindow segment_window(const CurvatureMeasure& measure, double a, double b, double tol) {
    const FrontalFrame& frame = measure.frame();
    if (frame.dimension() != 2) throw Error(ErrorKind::dimension, "segment windows are planar");
    if (!(a < b)) throw Error(ErrorKind::spec, "segment window needs a < b");
    if (frame.distance_to_singular(a) < 1e-12 || frame.distance_to_singular(b) < 1e-12) {
        throw Error(ErrorKind::endpoint_singular, "segment window endpoint is a singular point");
    }
    SegmentWindow w;
    w.a = a;
    w.b = b;
    w.interior_cusps = frame.cusps_between(a, b);
    w.interior_singular = frame.singular_between(a, b);
    const Integral k = measure.absolute(a, b, tol);
    w.K_segment = k.value;
    w.K_error = k.error;

    const ClosedCurve& curve = frame.curve();
    const Vector ta = curve.velocity(a).normalized();
    const Vector tb = curve.velocity(b).normalized();
    w.phi = std::acos(std::clamp(-ta.dot(tb), -1.0, 1.0));
    const Vector ea = frame.e(a);
    const Vector eb = frame.e(b);
    w.epsilon_a = ta.dot(ea) > 0.0 ? 1 : -1;
    w.epsilon_b = tb.dot(eb) > 0.0 ? 1 : -1;
    w.e_angle = std::acos(std::clamp(ea.dot(eb), -1.0, 1.0));
    return w;
}

SegmentWindow segment_window(const FrontalFrame& frame, double a, double b, double tol) {
    const CurvatureMeasure m(frame);
    return segment_window(m, a, b, tol);
}

EndpointBound check_endpoint_bounds(const SegmentWindow& w, double band) {
    EndpointBound out;
    if (w.interior_singular != w.interior_cusps) {
        out.note = "interior singular point that is not a cusp";
        return out;
    }
    switch (w.interior_cusps) {
        case 0:
            out.kind = BoundKind::regular_loop;
            out.bound = kPi;
            out.strict = true;
            break;
        case 1:
            out.kind = BoundKind::one_cusp;
            out.bound = w.phi;
            out.strict = true;
            break;
        case 2:
            out.kind = BoundKind::two_cusps;
            out.bound = kPi - w.phi;
            out.strict = false;
            break;
        default:
            out.note = "no bound for " + std::to_string(w.interior_cusps) + " interior cusps";
            return out;
    }
    out.applicable = true;
    out.margin = w.K_segment - out.bound;
    out.pass = out.margin >= -(band + w.K_error);
    out.positive = out.margin > band;
    return out;
}

double signed_area(const ClosedCurve& curve) {
    if (curve.dimension() != 2) throw Error(ErrorKind::dimension, "signed area is planar");
    auto integrand = [&](double t) {
        const Jet j = curve.eval_jet(t, 1);
        return 0.5 * det2(j[0], j[1]);
    };
    return quad::composite(integrand, 0.0, kTwoPi, 512);
}

int winding_number(const ClosedCurve& curve, const Eigen::Vector2d& q) {
    if (curve.dimension() != 2) throw Error(ErrorKind::dimension, "winding number is planar");
    auto integrand = [&](double t) {
        const Jet j = curve.eval_jet(t, 1);
        const Eigen::Vector2d d = j[0].head<2>() - q;
        return (d.x() * j[1][1] - d.y() * j[1][0]) / d.squaredNorm();
    };
    std::vector<double> bp;
    constexpr int kPieces = 64;
    for (int i = 0; i <= kPieces; ++i) bp.push_back(kTwoPi * i / kPieces);
    const quad::Result r = quad::integrate(integrand, std::span<const double>(bp), 1e-6);
    return static_cast<int>(std::lround(r.value / kTwoPi));
}

namespace {

// Interior angle at a cusp. Both one-sided tangents tilt toward the part of
// gamma''' normal to gamma'', so along the parameter T turns by
// -pi * sign det(gamma'', gamma''') there; with the interior on the left the
// exterior angle is eta times that and the interior angle is pi minus it.
double cusp_interior_angle(const ClosedCurve& curve, const SingularPoint& p, int eta) {
    double det = p.cusp_det.value_or(0.0);
    if (!p.cusp_det) {
        const Jet j = curve.derivative_jet(p.t, 3);
        det = det2(j[2], j[3]);
    }
    return kPi * (1.0 + eta * (det > 0.0 ? 1.0 : -1.0));
}

}  // namespace

GaussBonnet gauss_bonnet_residual(const FrontalFrame& frame, Simplicity simple, double tol) {
    if (frame.dimension() != 2) throw Error(ErrorKind::dimension, "Gauss-Bonnet check is planar");
    if (simple != Simplicity::simple) throw Error(ErrorKind::precondition, "Gauss-Bonnet check needs a simple curve");
    if (!all_cusps(frame.singular_points())) {
        throw Error(ErrorKind::precondition, "Gauss-Bonnet check needs every singular point to be a cusp");
    }
    GaussBonnet gb;
    gb.cusps = static_cast<int>(frame.singular_points().size());
    gb.oriented_total = oriented_total(frame, tol).value;
    gb.signed_area = signed_area(frame.curve());
    gb.eta = gb.signed_area >= 0.0 ? 1 : -1;
    gb.interior_left_total = gb.eta * gb.oriented_total;
    double corners = 0.0;
    for (const auto& p : frame.singular_points()) {
        gb.interior_angles.push_back(cusp_interior_angle(frame.curve(), p, gb.eta));
        corners += gb.interior_angles.back();
    }
    gb.residual = std::abs(corners - (gb.cusps - 2) * kPi - gb.interior_left_total);
    return gb;
}

}  // namespace frontal
