#include "frontal/singular.hpp"

#include "frontal/error.hpp"

#include <algorithm>
#include <cmath>

namespace frontal {

namespace {

struct GridSample {
    double t;
    double speed2;
};

double grid_param(const ClosedCurve& curve, int i) {
    const double span = curve.domain_hi() - curve.domain_lo();
    if (curve.is_periodic()) return curve.domain_lo() + span * i / kSingularGrid;
    return curve.domain_lo() + span * i / (kSingularGrid - 1);
}

// Safeguarded Newton on g(t) = gamma'(t) . gamma''(t) inside [lo, hi].
double refine_minimum(const ClosedCurve& curve, double lo, double hi) {
    auto g_and_slope = [&](double t) {
        const Jet j = curve.derivative_jet(t, 3);
        const double g = j.values.col(1).dot(j.values.col(2));
        const double dg = j.values.col(2).squaredNorm() + j.values.col(1).dot(j.values.col(3));
        return std::pair{g, dg};
    };
    double g_lo = g_and_slope(lo).first;
    double g_hi = g_and_slope(hi).first;
    if (g_lo > 0.0 || g_hi < 0.0) {
        // Not a clean bracket: fall back to the better endpoint/midpoint.
        const double mid = 0.5 * (lo + hi);
        double best = mid;
        double best_v = curve.velocity(mid).squaredNorm();
        for (double t : {lo, hi}) {
            const double v = curve.velocity(t).squaredNorm();
            if (v < best_v) {
                best = t;
                best_v = v;
            }
        }
        return best;
    }
    double t = 0.5 * (lo + hi);
    for (int iter = 0; iter < 200 && hi - lo > kRefineTolerance; ++iter) {
        const auto [g, dg] = g_and_slope(t);
        if (g == 0.0) return t;
        if (g < 0.0) {
            lo = t;
        } else {
            hi = t;
        }
        double next = (dg > 0.0) ? t - g / dg : 0.5 * (lo + hi);
        if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
        if (std::abs(next - t) < 0.25 * kRefineTolerance) {
            t = next;
            break;
        }
        t = next;
    }
    return t;
}

int vanishing_order(const ClosedCurve& curve, double t) {
    const Jet j = curve.derivative_jet(t, kMaxJetOrder);
    const double threshold = kSingularThreshold * curve.scale();
    for (int r = 1; r + 1 <= kMaxJetOrder; ++r) {
        if (j.values.col(r + 1).norm() > threshold) return r;
    }
    throw Error(ErrorKind::unsupported_singularity,
                "singular point at t = " + std::to_string(t) + " has vanishing order above 3");
}

}  // namespace

std::vector<SingularPoint> detect_singular_points(const ClosedCurve& curve) {
    const int n = kSingularGrid;
    const double scale = curve.scale();
    const double threshold = kSingularThreshold * scale;
    const bool periodic = curve.is_periodic();

    std::vector<GridSample> grid(static_cast<std::size_t>(n));
    double max_accel = 0.0;
    for (int i = 0; i < n; ++i) {
        const double t = grid_param(curve, i);
        const Jet j = curve.derivative_jet(t, 2);
        grid[static_cast<std::size_t>(i)] = {t, j.values.col(1).squaredNorm()};
        max_accel = std::max(max_accel, j.values.col(2).norm());
    }

    // A zero of gamma' that is not isolated shows up as a long run of samples
    // where the whole jet vanishes. A high-order isolated zero also gives a wide
    // dip in speed, but its higher derivatives are nonzero off the center.
    constexpr int kMergeWidth = 16;
    std::vector<char> flat(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
        auto& s = grid[static_cast<std::size_t>(i)];
        if (std::sqrt(s.speed2) >= threshold) continue;
        const Jet j = curve.derivative_jet(s.t, kMaxJetOrder);
        flat[static_cast<std::size_t>(i)] = j.values.rightCols(kMaxJetOrder).cwiseAbs().maxCoeff() < threshold;
    }
    int run = 0;
    for (int k = 0; k < (periodic ? 2 * n : n); ++k) {
        const auto& s = grid[static_cast<std::size_t>(k % n)];
        run = flat[static_cast<std::size_t>(k % n)] ? run + 1 : 0;
        if (run > kMergeWidth || run >= n) {
            throw Error(ErrorKind::degenerate_curve,
                        "gamma' vanishes on an interval near t = " + std::to_string(s.t));
        }
    }

    const double h = grid_param(curve, 1) - grid_param(curve, 0);
    // A zero of gamma' lies within h/2 of a grid point, where |gamma'| <= h/2 max|gamma''|.
    const double reach = 2.0 * h * max_accel + threshold;
    std::vector<SingularPoint> out;
    for (int i = 0; i < n; ++i) {
        if (!periodic && (i == 0 || i == n - 1)) continue;
        const double here = grid[static_cast<std::size_t>(i)].speed2;
        const double prev = grid[static_cast<std::size_t>((i + n - 1) % n)].speed2;
        const double next = grid[static_cast<std::size_t>((i + 1) % n)].speed2;
        if (!(here <= prev && here <= next) || std::sqrt(here) > reach) continue;
        const double t0 = grid[static_cast<std::size_t>(i)].t;
        double t = refine_minimum(curve, t0 - h, t0 + h);
        if (!(curve.velocity(t).norm() <= threshold)) continue;
        if (periodic) t = wrap_two_pi(t);
        out.push_back({t, 0, false, std::nullopt});
    }

    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
    std::vector<SingularPoint> unique;
    constexpr double kDedupe = 1e-9;
    for (const auto& p : out) {
        if (!unique.empty() && std::abs(p.t - unique.back().t) < kDedupe) continue;
        unique.push_back(p);
    }
    if (periodic && unique.size() > 1 && unique.front().t + kTwoPi - unique.back().t < kDedupe) {
        unique.pop_back();
    }
    for (auto& p : unique) p.order = vanishing_order(curve, p.t);
    return unique;
}

SingularPoint classify_cusp(const ClosedCurve& curve, SingularPoint p) {
    if (curve.dimension() != 2) {
        throw Error(ErrorKind::dimension, "cusp criterion is defined for planar curves only");
    }
    const Jet j = curve.derivative_jet(p.t, 3);
    const double det = det2(j[2], j[3]);
    const double scale = curve.scale();
    p.cusp_det = det;
    p.is_cusp = p.order == 1 && std::abs(det) > kCuspCriterion * scale * scale * scale;
    return p;
}

std::vector<SingularPoint> find_singular_points(const ClosedCurve& curve) {
    auto points = detect_singular_points(curve);
    if (curve.dimension() == 2) {
        for (auto& p : points) p = classify_cusp(curve, p);
    }
    return points;
}

int cusp_count(std::span<const SingularPoint> points) {
    return static_cast<int>(std::count_if(points.begin(), points.end(), [](const auto& p) { return p.is_cusp; }));
}

int cusp_count(const ClosedCurve& curve) {
    if (curve.dimension() != 2) throw Error(ErrorKind::dimension, "cusp count is defined for planar curves only");
    const auto points = find_singular_points(curve);
    return cusp_count(std::span<const SingularPoint>(points));
}

bool all_cusps(std::span<const SingularPoint> points) {
    return std::all_of(points.begin(), points.end(), [](const auto& p) { return p.is_cusp; });
}

}  // namespace frontal
