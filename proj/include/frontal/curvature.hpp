#pragma once

#include "frontal/frame.hpp"

#include <algorithm>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace frontal {

inline constexpr double kDefaultTolerance = 1e-9;

/// Band used for equality cases (|K - pi|, |L - 2pi|, ...).
inline double equality_band(double tol) { return std::max(1e-8, 10.0 * tol); }

enum class LConvexity { nonneg, nonpos, mixed };
std::string_view to_string(LConvexity c);

struct Integral {
    double value = 0.0;
    double error = 0.0;
};

// Curvature measure |e'(t)| dt and, for planar curves, the oriented measure
// det(e, e') dt of a frontal, with the breakpoints every integral over it
// must respect: singular parameters, and for planar curves the sign changes
// of det(e, e') where |det(e, e')| has a kink.
class CurvatureMeasure {
public:
    explicit CurvatureMeasure(const FrontalFrame& frame);

    const FrontalFrame& frame() const { return *frame_; }

    /// |e'(t)|. Throws a domain error exactly at a singular parameter.
    double density(double t) const;
    /// det(e(t), e'(t)); planar only. Throws exactly at a singular parameter.
    double oriented_density(double t) const;

    /// Zeros of the oriented density in [0, 2pi) (planar only; empty otherwise).
    std::span<const double> inflections() const { return inflections_; }

    /// Sorted breakpoints inside [a, b], including a and b; the window may be lifted past 2pi.
    std::vector<double> breakpoints(double a, double b) const;

    Integral absolute(double a, double b, double tol) const;
    Integral oriented(double a, double b, double tol) const;

    /// Arclength of e over [a, b] from chord sums with Richardson extrapolation,
    /// without touching the curvature density.
    double indicatrix_length(double a, double b, double tol) const;

private:
    double density_unchecked(double t) const;
    double oriented_unchecked(double t) const;

    const FrontalFrame* frame_;
    std::vector<double> inflections_;
};

double curvature_integrand(const FrontalFrame& frame, double t);
double oriented_curvature(const FrontalFrame& frame, double t);

/// K over [0, 2pi]; throws AccuracyError when the panel budget runs out first.
Integral total_absolute_curvature(const FrontalFrame& frame, double tol = kDefaultTolerance);
Integral oriented_total(const FrontalFrame& frame, double tol = kDefaultTolerance);

LConvexity l_convexity(const FrontalFrame& frame);

double indicatrix_length(const FrontalFrame& frame, double tol = kDefaultTolerance);

/// Affine least-squares plane fit; planar iff max residual <= 1e-9 * scale.
bool planarity_check(const ClosedCurve& curve);
double planarity_residual(const ClosedCurve& curve);

/// Distance of the tangent indicatrix over [0, 2pi] from its best 2-plane through the origin.
double great_circle_residual(const FrontalFrame& frame);

struct CurvatureSummary {
    double K = 0.0;
    double quad_error_estimate = 0.0;
    double indicatrix_length = 0.0;
    std::optional<HalfInteger> index;
    std::optional<LConvexity> l_convex;
    std::optional<int> sigma;            // +1 / -1 when locally L-convex
    std::optional<double> oriented_total;
    bool planar = true;
};

CurvatureSummary summarize_curvature(const FrontalFrame& frame, double tol = kDefaultTolerance);

}  // namespace frontal
