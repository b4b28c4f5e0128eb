#include "frontal/curvature.hpp"

#include "frontal/error.hpp"
#include "frontal/quadrature.hpp"

#include <algorithm>
#include <cmath>

namespace frontal {

namespace {

constexpr int kSignGrid = 8192;

void check_regular(const FrontalFrame& frame, double t) {
    if (frame.is_singular(t)) {
        throw Error(ErrorKind::domain, "curvature density requested at singular parameter t = " + std::to_string(t));
    }
}

void add_lifted(std::vector<double>& out, double base, double a, double b, bool periodic) {
    if (!periodic) {
        if (base > a && base < b) out.push_back(base);
        return;
    }
    const double first = std::ceil((a - base) / kTwoPi);
    for (double k = first; base + k * kTwoPi < b; k += 1.0) {
        const double t = base + k * kTwoPi;
        if (t > a) out.push_back(t);
    }
}

// Chord-sum length of e on [a, b] extrapolated in h^2, h^4, ...
double romberg_chords(const FrontalFrame& frame, double a, double b, double tol) {
    constexpr int kStart = 8;
    constexpr int kMaxLevel = 18;
    std::vector<Vector> pts;
    pts.reserve(kStart + 1);
    for (int i = 0; i <= kStart; ++i) pts.push_back(frame.e(a + (b - a) * i / kStart));

    auto chord_sum = [](const std::vector<Vector>& p) {
        double s = 0.0;
        for (std::size_t i = 1; i < p.size(); ++i) s += (p[i] - p[i - 1]).norm();
        return s;
    };

    std::vector<std::vector<double>> table;
    table.push_back({chord_sum(pts)});
    for (int level = 1; level <= kMaxLevel; ++level) {
        const std::size_t segments = pts.size() - 1;
        std::vector<Vector> next;
        next.reserve(2 * segments + 1);
        const double step = (b - a) / static_cast<double>(2 * segments);
        for (std::size_t i = 0; i < segments; ++i) {
            next.push_back(pts[i]);
            next.push_back(frame.e(a + step * static_cast<double>(2 * i + 1)));
        }
        next.push_back(pts.back());
        pts = std::move(next);

        std::vector<double> row{chord_sum(pts)};
        double factor = 1.0;
        for (int j = 1; j <= level; ++j) {
            factor *= 4.0;
            const double prev_same = row[static_cast<std::size_t>(j - 1)];
            const double prev_coarse = table.back()[static_cast<std::size_t>(j - 1)];
            row.push_back(prev_same + (prev_same - prev_coarse) / (factor - 1.0));
        }
        const double change = std::abs(row.back() - table.back().back());
        table.push_back(std::move(row));
        if (level >= 3 && change <= tol) break;
    }
    return table.back().back();
}

}  // namespace

std::string_view to_string(LConvexity c) {
    switch (c) {
        case LConvexity::nonneg: return "nonneg";
        case LConvexity::nonpos: return "nonpos";
        case LConvexity::mixed: return "mixed";
    }
    return "mixed";
}

CurvatureMeasure::CurvatureMeasure(const FrontalFrame& frame) : frame_(&frame) {
    if (frame.dimension() != 2) return;
    const double lo = frame.curve().domain_lo();
    const double hi = frame.curve().domain_hi();
    const double h = (hi - lo) / kSignGrid;
    std::vector<double> ts(kSignGrid + 1);
    std::vector<double> ks(kSignGrid + 1);
    double peak = 0.0;
    for (int i = 0; i <= kSignGrid; ++i) {
        double t = lo + h * i;
        if (frame.is_singular(t)) t += 1e-3 * h;
        ts[static_cast<std::size_t>(i)] = t;
        ks[static_cast<std::size_t>(i)] = oriented_unchecked(t);
        peak = std::max(peak, std::abs(ks[static_cast<std::size_t>(i)]));
    }
    if (!(peak > 0.0)) return;
    const double floor = 1e-9 * peak;
    for (int i = 0; i < kSignGrid; ++i) {
        double ta = ts[static_cast<std::size_t>(i)];
        double tb = ts[static_cast<std::size_t>(i + 1)];
        double ka = ks[static_cast<std::size_t>(i)];
        const double kb = ks[static_cast<std::size_t>(i + 1)];
        if ((ka > 0.0) == (kb > 0.0) || std::max(std::abs(ka), std::abs(kb)) < floor) continue;
        if (ka == 0.0 || kb == 0.0) continue;
        for (int iter = 0; iter < 80 && tb - ta > 1e-15 * (1.0 + std::abs(ta)); ++iter) {
            const double tm = 0.5 * (ta + tb);
            const double km = frame.is_singular(tm) ? ka : oriented_unchecked(tm);
            if ((km > 0.0) == (ka > 0.0)) {
                ta = tm;
                ka = km;
            } else {
                tb = tm;
            }
        }
        const double root = 0.5 * (ta + tb);
        inflections_.push_back(frame.curve().is_periodic() ? wrap_two_pi(root) : root);
    }
    std::sort(inflections_.begin(), inflections_.end());
}

double CurvatureMeasure::density_unchecked(double t) const { return frame_->tangent(t).de.norm(); }

double CurvatureMeasure::oriented_unchecked(double t) const {
    const TangentJet j = frame_->tangent(t);
    return det2(j.e, j.de);
}

double CurvatureMeasure::density(double t) const {
    check_regular(*frame_, t);
    return density_unchecked(t);
}

double CurvatureMeasure::oriented_density(double t) const {
    if (frame_->dimension() != 2) throw Error(ErrorKind::dimension, "oriented curvature is planar only");
    check_regular(*frame_, t);
    return oriented_unchecked(t);
}

std::vector<double> CurvatureMeasure::breakpoints(double a, double b) const {
    std::vector<double> out{a};
    const bool periodic = frame_->curve().is_periodic();
    for (const auto& p : frame_->singular_points()) add_lifted(out, p.t, a, b, periodic);
    for (double t : inflections_) add_lifted(out, t, a, b, periodic);
    out.push_back(b);
    std::sort(out.begin(), out.end());
    std::vector<double> unique;
    for (double t : out) {
        if (unique.empty() || t - unique.back() > 1e-12) unique.push_back(t);
    }
    if (unique.back() != b) unique.back() = b;
    return unique;
}

Integral CurvatureMeasure::absolute(double a, double b, double tol) const {
    if (!(tol > 0.0)) throw Error(ErrorKind::spec, "tolerance must be positive");
    const auto bp = breakpoints(a, b);
    const auto r = quad::integrate([this](double t) { return density_unchecked(t); }, std::span<const double>(bp), tol);
    return {r.value, r.error};
}

Integral CurvatureMeasure::oriented(double a, double b, double tol) const {
    if (frame_->dimension() != 2) throw Error(ErrorKind::dimension, "oriented curvature is planar only");
    if (!(tol > 0.0)) throw Error(ErrorKind::spec, "tolerance must be positive");
    const auto bp = breakpoints(a, b);
    const auto r = quad::integrate([this](double t) { return oriented_unchecked(t); }, std::span<const double>(bp), tol);
    return {r.value, r.error};
}

double CurvatureMeasure::indicatrix_length(double a, double b, double tol) const {
    const auto bp = breakpoints(a, b);
    const double total = b - a;
    double length = 0.0;
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const double share = std::max((bp[i + 1] - bp[i]) / total, 1e-6);
        length += romberg_chords(*frame_, bp[i], bp[i + 1], 0.25 * tol * share);
    }
    return length;
}

double curvature_integrand(const FrontalFrame& frame, double t) { return CurvatureMeasure(frame).density(t); }

double oriented_curvature(const FrontalFrame& frame, double t) {
    if (frame.dimension() != 2) throw Error(ErrorKind::dimension, "oriented curvature is planar only");
    check_regular(frame, t);
    const TangentJet j = frame.tangent(t);
    return det2(j.e, j.de);
}

Integral total_absolute_curvature(const FrontalFrame& frame, double tol) {
    const CurvatureMeasure m(frame);
    return m.absolute(frame.curve().domain_lo(), frame.curve().domain_hi(), tol);
}

Integral oriented_total(const FrontalFrame& frame, double tol) {
    const CurvatureMeasure m(frame);
    return m.oriented(frame.curve().domain_lo(), frame.curve().domain_hi(), tol);
}

namespace {

LConvexity classify_sign(const FrontalFrame& frame, const CurvatureMeasure& m) {
    const double lo = frame.curve().domain_lo();
    const double hi = frame.curve().domain_hi();
    double min_k = 0.0;
    double max_k = 0.0;
    double peak = 0.0;
    bool first = true;
    auto record = [&](double t) {
        if (frame.is_singular(t)) return;
        const TangentJet j = frame.tangent(t);
        const double k = det2(j.e, j.de);
        if (first) {
            min_k = max_k = k;
            first = false;
        }
        min_k = std::min(min_k, k);
        max_k = std::max(max_k, k);
        peak = std::max(peak, std::abs(k));
    };
    for (int i = 0; i < kSignGrid; ++i) record(lo + (hi - lo) * i / kSignGrid);
    const auto bp = m.breakpoints(lo, hi);
    const quad::Rule& rule = quad::gauss_legendre_16();
    for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
        const double mid = 0.5 * (bp[i] + bp[i + 1]);
        const double half = 0.5 * (bp[i + 1] - bp[i]);
        for (double x : rule.nodes) record(mid + half * x);
    }
    const double tol_sign = std::max(1e-9 * peak, 1e-12);
    if (min_k >= -tol_sign) return LConvexity::nonneg;
    if (max_k <= tol_sign) return LConvexity::nonpos;
    return LConvexity::mixed;
}

}  // namespace

LConvexity l_convexity(const FrontalFrame& frame) {
    if (frame.dimension() != 2) throw Error(ErrorKind::dimension, "local L-convexity is planar only");
    const CurvatureMeasure m(frame);
    return classify_sign(frame, m);
}

double indicatrix_length(const FrontalFrame& frame, double tol) {
    const CurvatureMeasure m(frame);
    return m.indicatrix_length(frame.curve().domain_lo(), frame.curve().domain_hi(), tol);
}

namespace {

double residual_from_plane(const Eigen::MatrixXd& centered) {
    if (centered.cols() <= 2) return 0.0;
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(centered, Eigen::ComputeThinV);
    const Eigen::MatrixXd basis = svd.matrixV().leftCols(2);
    const Eigen::MatrixXd off = centered - (centered * basis) * basis.transpose();
    return off.rowwise().norm().maxCoeff();
}

}  // namespace

double planarity_residual(const ClosedCurve& curve) {
    if (curve.dimension() == 2) return 0.0;
    constexpr int kSamples = 4096;
    Eigen::MatrixXd pts(kSamples, curve.dimension());
    const double lo = curve.domain_lo();
    const double hi = curve.domain_hi();
    for (int i = 0; i < kSamples; ++i) pts.row(i) = curve.position(lo + (hi - lo) * i / kSamples).transpose();
    const Eigen::RowVectorXd centroid = pts.colwise().mean();
    pts.rowwise() -= centroid;
    return residual_from_plane(pts);
}

bool planarity_check(const ClosedCurve& curve) {
    return planarity_residual(curve) <= 1e-9 * curve.scale();
}

double great_circle_residual(const FrontalFrame& frame) {
    if (frame.dimension() == 2) return 0.0;
    constexpr int kSamples = 4096;
    Eigen::MatrixXd pts(kSamples, frame.dimension());
    for (int i = 0; i < kSamples; ++i) pts.row(i) = frame.e(kTwoPi * i / kSamples).transpose();
    return residual_from_plane(pts);
}

CurvatureSummary summarize_curvature(const FrontalFrame& frame, double tol) {
    const CurvatureMeasure m(frame);
    const double lo = frame.curve().domain_lo();
    const double hi = frame.curve().domain_hi();
    CurvatureSummary s;
    const Integral k = m.absolute(lo, hi, tol);
    s.K = k.value;
    s.quad_error_estimate = k.error;
    s.indicatrix_length = m.indicatrix_length(lo, hi, tol);
    s.planar = planarity_check(frame.curve());
    if (frame.dimension() == 2) {
        s.index = rotation_index(angle_lift(frame));
        s.l_convex = classify_sign(frame, m);
        if (*s.l_convex != LConvexity::mixed) s.sigma = (*s.l_convex == LConvexity::nonneg) ? 1 : -1;
        s.oriented_total = m.oriented(lo, hi, tol).value;
    }
    return s;
}

}  // namespace frontal
