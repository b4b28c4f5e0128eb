#pragma once

#include "frontal/curvature.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace frontal {

struct IntersectionPair {
    double a = 0.0;  // a < b, both in [0, 2pi)
    double b = 0.0;
    Vector point;
    double refinement_residual = 0.0;
};

/// A polyline crossing whose Newton refinement failed (tangential contact or divergence).
struct UnresolvedCandidate {
    double a = 0.0;
    double b = 0.0;
    std::string reason;
};

struct IntersectionCensus {
    std::vector<IntersectionPair> pairs;
    std::vector<UnresolvedCandidate> unresolved;
};

inline constexpr int kPolylineSamples = 8192;
inline constexpr double kSeparation = 1e-3;

/// Transversal self-intersections of a planar closed curve, sorted by (a, b).
IntersectionCensus self_intersections(const ClosedCurve& curve);

enum class Simplicity { simple, not_simple, indeterminate };
std::string_view to_string(Simplicity s);

Simplicity simplicity(const IntersectionCensus& census);
Simplicity is_simple(const ClosedCurve& curve);

struct SegmentWindow {
    double a = 0.0;
    double b = 0.0;
    int interior_cusps = 0;      // j
    int interior_singular = 0;
    double phi = 0.0;            // arccos(-T(a+) . T(b-))
    double K_segment = 0.0;
    double K_error = 0.0;
    int epsilon_a = 1;           // T(a+) . e(a)
    int epsilon_b = 1;           // T(b-) . e(b)
    double e_angle = 0.0;        // arccos(e(a) . e(b))
};

/// Window [a, b] of the frontal (b may exceed 2pi). Endpoints must be regular.
SegmentWindow segment_window(const CurvatureMeasure& measure, double a, double b,
                             double tol = kDefaultTolerance);
SegmentWindow segment_window(const FrontalFrame& frame, double a, double b, double tol = kDefaultTolerance);

enum class BoundKind { regular_loop, one_cusp, two_cusps };

struct EndpointBound {
    bool applicable = false;
    BoundKind kind = BoundKind::regular_loop;
    double bound = 0.0;    // pi, phi or pi - phi
    double margin = 0.0;   // K_segment - bound
    bool strict = true;
    bool pass = false;       // margin >= -band
    bool positive = false;   // margin > band
    std::string note;
};

/// j = 0: K > pi; j = 1: K > phi; j = 2: K >= pi - phi. Not applicable otherwise,
/// or when an interior singular point is not a cusp. Quadrature cannot tell a
/// strict inequality from equality, so `pass` allows -band and `positive`
/// records whether the margin clears +band.
EndpointBound check_endpoint_bounds(const SegmentWindow& window, double band = equality_band(kDefaultTolerance));

struct GaussBonnet {
    double residual = 0.0;
    std::vector<double> interior_angles;  // 0 when the cusp points out of the region, 2pi when it points in
    int eta = 1;             // traversal orientation that keeps the interior on the left
    int cusps = 0;
    double oriented_total = 0.0;   // along the parameter
    double interior_left_total = 0.0;  // eta * oriented_total
    double signed_area = 0.0;
};

/// Enclosed signed area (positive for counter-clockwise traversal).
double signed_area(const ClosedCurve& curve);

/// Winding number of the closed planar curve around q (q off the curve).
int winding_number(const ClosedCurve& curve, const Eigen::Vector2d& q);

/// |sum of interior angles - (N - 2) pi - eta * oriented_total| for a simple
/// planar front whose singular points are all cusps.
GaussBonnet gauss_bonnet_residual(const FrontalFrame& frame, Simplicity simple, double tol = kDefaultTolerance);

}  // namespace frontal
