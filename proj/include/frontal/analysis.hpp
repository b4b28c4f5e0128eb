#pragma once

#include "frontal/curvature.hpp"
#include "frontal/topology.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace frontal {

inline constexpr const char* kToolVersion = "0.3.0";
inline constexpr const char* kSignConvention =
    "e(0+) = T(0+) (sign +1 on the regular interval starting at t = 0); e flips relative to T "
    "across singular points of odd vanishing order";

enum class TheoremId {
    a_bound,
    a_equality,
    b_parity,
    b_simplicity,
    t_length,
    theta_prime,
    sgn_boundary,
    theta_integral,
    cusp_bounds,
    gauss_bonnet,
    rs_doubled,
};

enum class Status { pass, fail, not_applicable };

struct TheoremVerdict {
    TheoremId id = TheoremId::a_bound;
    Status status = Status::not_applicable;
    double margin = 0.0;
    std::string details;
};

struct WindowCheck {
    std::size_t pair = 0;  // index into the intersection pairs
    SegmentWindow window;
    EndpointBound bound;
};

struct AnalysisOptions {
    double tol = kDefaultTolerance;
    bool topology = true;        // self-intersections and everything built on them
    int crossing_trials = 64;
    std::uint64_t seed = 1;
};

// Every number the theorem checks read, computed once per curve.
struct AnalysisReport {
    nlohmann::json curve_spec;
    int dimension = 2;
    double scale = 1.0;
    double tol = kDefaultTolerance;

    std::vector<SingularPoint> singular;
    int cusps = 0;
    bool all_cusps = true;
    bool co_orientable = true;
    double max_continuity_gap = 0.0;

    double K = 0.0;
    double K_error = 0.0;
    double indicatrix_length = 0.0;
    std::optional<HalfInteger> index;
    std::optional<double> theta_change;
    std::optional<LConvexity> l_convex;
    std::optional<int> sigma;
    std::optional<double> oriented_total;
    bool planar = true;
    double planarity_residual = 0.0;

    std::optional<IntersectionCensus> intersections;
    std::optional<Simplicity> simple;
    std::optional<GaussBonnet> gauss_bonnet;
    std::vector<WindowCheck> windows;

    // Lemma-level consistency checks.
    std::optional<double> theta_prime_max_deviation;
    int theta_prime_samples = 0;
    int sgn_windows = 0;
    int sgn_violations = 0;
    int theta_integral_windows = 0;
    std::optional<double> theta_integral_min_margin;
    std::optional<double> doubled_length;
    std::optional<double> great_circle_residual;
    std::optional<bool> hyperspheres_crossed;

    std::vector<TheoremVerdict> verdicts;
};

/// Full pipeline: singular points, frame, curvature, topology, lemma checks and verdicts.
AnalysisReport analyze(const ClosedCurve& curve, const AnalysisOptions& options = {});

}  // namespace frontal
