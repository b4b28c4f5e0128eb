#include "frontal/analysis.hpp"

#include "frontal/curve_spec.hpp"
#include "frontal/error.hpp"
#include "frontal/verify.hpp"

#include <algorithm>
#include <cmath>

namespace frontal {

namespace {

constexpr int kThetaPrimeSamples = 1000;
constexpr double kThetaPrimeStep = 1e-4;
constexpr double kThetaPrimeGuard = 1e-3;
constexpr int kTransportGrid = 8192;
constexpr int kThetaIntegralWindows = 32;

std::vector<double> interval_midpoints(const FrontalFrame& frame, double lo, double hi) {
    // Midpoints of the regular intervals over [lo, hi), hi - lo a multiple of 2pi.
    std::vector<double> mids;
    const auto ivs = frame.intervals();
    for (double base = lo; base < hi - 1e-12; base += kTwoPi) {
        for (const auto& iv : ivs) mids.push_back(base + 0.5 * (iv.lo + iv.hi));
    }
    return mids;
}

int sign_of(double v) { return v >= 0.0 ? 1 : -1; }

// Continuation of the tangent line field from t = lo using only gamma': the
// carried unit vector is flipped whenever T reverses between grid points.
// Returns the number of flips accumulated up to each query parameter.
std::vector<int> transport_flips(const ClosedCurve& curve, std::span<const double> queries) {
    std::vector<double> grid;
    const double lo = queries.front();
    const double hi = queries.back();
    const int steps = static_cast<int>(std::ceil((hi - lo) / kTwoPi * kTransportGrid));
    for (int k = 0; k <= steps; ++k) grid.push_back(lo + (hi - lo) * k / std::max(steps, 1));
    grid.insert(grid.end(), queries.begin(), queries.end());
    std::sort(grid.begin(), grid.end());

    const double floor = 1e-9 * curve.scale();
    std::vector<int> out;
    out.reserve(queries.size());
    Vector prev;
    int flips = 0;
    std::size_t q = 0;
    for (double t : grid) {
        const Vector v = curve.velocity(t);
        if (v.norm() > floor) {
            const Vector tv = v.normalized();
            if (prev.size() > 0 && tv.dot(prev) < 0.0) ++flips;
            prev = tv;
        }
        while (q < queries.size() && queries[q] <= t) {
            out.push_back(flips);
            ++q;
        }
    }
    while (q < queries.size()) {
        out.push_back(flips);
        ++q;
    }
    return out;
}

void sign_boundary_checks(const FrontalFrame& frame, AnalysisReport& r) {
    const std::vector<double> mids = interval_midpoints(frame, 0.0, 2.0 * kTwoPi);
    const std::vector<int> flips = transport_flips(frame.curve(), mids);
    std::vector<int> eps(mids.size());
    for (std::size_t i = 0; i < mids.size(); ++i) {
        eps[i] = sign_of(frame.curve().velocity(mids[i]).dot(frame.e(mids[i])));
    }
    for (std::size_t i = 0; i < mids.size(); ++i) {
        for (std::size_t k = i + 1; k < mids.size(); ++k) {
            const int j = frame.cusps_between(mids[i], mids[k]);
            const int expected = (j % 2 == 0) ? 1 : -1;
            const bool direct_ok = eps[i] * eps[k] == expected;
            const bool transport_ok = ((flips[k] - flips[i]) % 2 == 0) == (j % 2 == 0);
            ++r.sgn_windows;
            if (!direct_ok || !transport_ok) ++r.sgn_violations;
        }
    }
}

void theta_prime_check(const FrontalFrame& frame, const CurvatureMeasure& measure, const AngleLift& lift,
                       AnalysisReport& r) {
    double worst = 0.0;
    int used = 0;
    for (int i = 0; i < kThetaPrimeSamples; ++i) {
        const double t = kTwoPi * (i + 0.5) / kThetaPrimeSamples;
        if (frame.distance_to_singular(t) < kThetaPrimeGuard) continue;
        const double h = kThetaPrimeStep;
        const double d1 = lift.theta(t + h) - lift.theta(t - h);
        const double d2 = lift.theta(t + 2 * h) - lift.theta(t - 2 * h);
        const double fd = (8.0 * d1 - d2) / (12.0 * h);
        worst = std::max(worst, std::abs(fd - measure.oriented_density(t)));
        ++used;
    }
    r.theta_prime_max_deviation = worst;
    r.theta_prime_samples = used;
}

double nudge_regular(const FrontalFrame& frame, double t) {
    while (frame.distance_to_singular(t) < 1e-7) t += 1e-6;
    return t;
}

void theta_integral_checks(const FrontalFrame& frame, const CurvatureMeasure& measure, double tol,
                           AnalysisReport& r) {
    std::vector<std::pair<double, double>> windows;
    const double golden = 0.5 * (std::sqrt(5.0) - 1.0);
    for (int i = 1; i <= kThetaIntegralWindows; ++i) {
        const double a = kTwoPi * std::fmod(i * golden, 1.0);
        const double len = kTwoPi * (0.05 + 0.9 * std::fmod(i * std::sqrt(2.0), 1.0));
        windows.push_back({a, a + len});
    }
    const std::vector<double> mids = interval_midpoints(frame, 0.0, kTwoPi);
    for (std::size_t i = 0; i + 1 < mids.size(); ++i) windows.push_back({mids[i], mids[i + 1]});

    double worst = std::numeric_limits<double>::infinity();
    for (auto [a, b] : windows) {
        a = nudge_regular(frame, a);
        b = nudge_regular(frame, b);
        if (!(a < b)) continue;
        const Integral k = measure.absolute(a, b, tol);
        const double angle = std::acos(std::clamp(frame.e(a).dot(frame.e(b)), -1.0, 1.0));
        worst = std::min(worst, k.value - angle);
        ++r.theta_integral_windows;
    }
    if (r.theta_integral_windows > 0) r.theta_integral_min_margin = worst;
}

void endpoint_windows(const CurvatureMeasure& measure, double tol, AnalysisReport& r) {
    const double band = equality_band(tol);
    const auto& pairs = r.intersections->pairs;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const std::pair<double, double> spans[2] = {{pairs[p].a, pairs[p].b}, {pairs[p].b, pairs[p].a + kTwoPi}};
        for (const auto& [a, b] : spans) {
            try {
                WindowCheck w;
                w.pair = p;
                w.window = segment_window(measure, a, b, tol);
                w.bound = check_endpoint_bounds(w.window, band);
                r.windows.push_back(std::move(w));
            } catch (const Error& e) {
                if (e.kind() != ErrorKind::endpoint_singular) throw;
            }
        }
    }
}

}  // namespace

AnalysisReport analyze(const ClosedCurve& curve, const AnalysisOptions& options) {
    if (!curve.is_periodic()) throw Error(ErrorKind::precondition, "analysis needs a closed curve");
    if (!(options.tol > 0.0) || !std::isfinite(options.tol)) throw Error(ErrorKind::spec, "tolerance must be positive");

    AnalysisReport r;
    r.curve_spec = curve_to_json(curve);
    r.dimension = curve.dimension();
    r.scale = curve.scale();
    r.tol = options.tol;

    r.singular = find_singular_points(curve);
    const FrontalFrame frame = build_frame(curve, r.singular);
    r.cusps = cusp_count(r.singular);
    r.all_cusps = all_cusps(r.singular);
    r.co_orientable = frame.co_orientable();
    r.max_continuity_gap = frame.max_continuity_gap();

    const CurvatureMeasure measure(frame);
    const Integral k = measure.absolute(0.0, kTwoPi, options.tol);
    r.K = k.value;
    r.K_error = k.error;
    r.indicatrix_length = measure.indicatrix_length(0.0, kTwoPi, options.tol);
    r.planarity_residual = planarity_residual(curve);
    r.planar = planarity_check(curve);

    if (r.dimension == 2) {
        const AngleLift lift = angle_lift(frame);
        r.theta_change = lift.total_change();
        r.index = rotation_index(lift);
        r.l_convex = l_convexity(frame);
        if (*r.l_convex != LConvexity::mixed) r.sigma = *r.l_convex == LConvexity::nonneg ? 1 : -1;
        r.oriented_total = measure.oriented(0.0, kTwoPi, options.tol).value;
        theta_prime_check(frame, measure, lift, r);
        if (r.all_cusps) sign_boundary_checks(frame, r);

        if (options.topology) {
            r.intersections = self_intersections(curve);
            r.simple = simplicity(*r.intersections);
            if (*r.simple == Simplicity::simple && r.all_cusps) {
                r.gauss_bonnet = gauss_bonnet_residual(frame, *r.simple, options.tol);
            }
            endpoint_windows(measure, options.tol, r);
        }
    }

    theta_integral_checks(frame, measure, options.tol, r);

    if (!r.co_orientable) {
        r.doubled_length = measure.indicatrix_length(0.0, 2.0 * kTwoPi, options.tol);
        r.great_circle_residual = great_circle_residual(frame);
        r.hyperspheres_crossed = hypersphere_crossing_check(frame, options.crossing_trials, options.seed);
    }

    r.verdicts = verify_all(r);
    return r;
}

}  // namespace frontal
