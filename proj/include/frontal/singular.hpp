#pragma once

#include "frontal/curve.hpp"

#include <optional>
#include <span>
#include <vector>

namespace frontal {

struct SingularPoint {
    double t = 0.0;
    int order = 1;                  // r with gamma' = (t - c)^r x(t), x(c) != 0
    bool is_cusp = false;
    std::optional<double> cusp_det; // det(gamma'', gamma''') for planar curves
};

// Tuning constants, relative to curve.scale().
inline constexpr int kSingularGrid = 4096;
inline constexpr double kSingularThreshold = 1e-6;
inline constexpr double kRefineTolerance = 1e-12;
inline constexpr double kCuspCriterion = 1e-8;

/// All zeros of gamma' over the parameter domain, sorted, canonicalized to
/// [0, 2pi) for closed curves.
std::vector<SingularPoint> detect_singular_points(const ClosedCurve& curve);

/// Fills cusp_det and is_cusp for a planar curve.
SingularPoint classify_cusp(const ClosedCurve& curve, SingularPoint p);

/// detect + classify for planar curves; detect only otherwise.
std::vector<SingularPoint> find_singular_points(const ClosedCurve& curve);

int cusp_count(std::span<const SingularPoint> points);

bool all_cusps(std::span<const SingularPoint> points);

}  // namespace frontal

namespace frontal {

/// Number of cusps after detection and classification (planar curves only).
int cusp_count(const ClosedCurve& curve);

}  // namespace frontal
