#pragma once

#include "frontal/curve.hpp"
#include "frontal/singular.hpp"

#include <cstdint>
#include <span>
#include <vector>

namespace frontal {

struct RegularInterval {
    double lo = 0.0;
    double hi = 0.0;
    int epsilon = 1;  // sign function T . e on (lo, hi)
};

struct TangentJet {
    Vector e;
    Vector de;  // de/dt
};

// Continuous unit tangent field e along a closed frontal, built from
// T = gamma'/|gamma'| by choosing a sign per regular interval. The sign is
// +1 on the interval that starts at t = 0 and flips across every singular
// point of odd vanishing order. Evaluable on all of R; 4pi-periodic, and
// 2pi-periodic exactly when the frontal is co-orientable.
class FrontalFrame {
public:
    FrontalFrame(ClosedCurve curve, std::vector<SingularPoint> singular);

    const ClosedCurve& curve() const { return curve_; }
    int dimension() const { return curve_.dimension(); }
    bool co_orientable() const { return co_orientable_; }
    std::span<const SingularPoint> singular_points() const { return singular_; }
    std::span<const RegularInterval> intervals() const { return intervals_; }

    Vector e(double t) const;
    TangentJet tangent(double t) const;

    /// True when t coincides with a singular parameter (mod 2pi).
    bool is_singular(double t) const;

    /// Distance from t to the nearest singular parameter (mod 2pi); infinity if none.
    double distance_to_singular(double t) const;

    /// Cusps strictly inside (a, b), with the window lifted to the line.
    int cusps_between(double a, double b) const;
    int singular_between(double a, double b) const;

    /// Max angle (radians) between one-sided limit estimates of e at the singular points.
    double max_continuity_gap() const { return max_gap_; }

private:
    TangentJet direct(double s) const;   // s in [0, 2pi), away from singular points
    int sign_in(double s) const;

    ClosedCurve curve_;
    std::vector<SingularPoint> singular_;
    std::vector<RegularInterval> intervals_;
    std::vector<Jet> local_jets_;    // order-4 jet at each singular point
    std::vector<int> right_sign_;    // epsilon just after each singular point
    bool co_orientable_ = true;
    double max_gap_ = 0.0;
};

/// Builds the frame and checks continuity across each singular point.
FrontalFrame build_frame(const ClosedCurve& curve, std::vector<SingularPoint> singular);
FrontalFrame build_frame(const ClosedCurve& curve);

/// Regular intervals with their epsilon value, starting at t = 0.
std::vector<RegularInterval> sign_trace(const FrontalFrame& frame);

class AngleLift {
public:
    AngleLift(FrontalFrame frame, std::vector<double> t, std::vector<double> theta);

    /// Unwrapped angle with e(t) = (cos theta(t), sin theta(t)), t in [0, 2pi].
    double theta(double t) const;
    double total_change() const { return theta_.back() - theta_.front(); }

    std::span<const double> sample_params() const { return t_; }
    std::span<const double> samples() const { return theta_; }
    const FrontalFrame& frame() const { return frame_; }

private:
    FrontalFrame frame_;
    std::vector<double> t_;
    std::vector<double> theta_;
};

inline constexpr std::size_t kMaxLiftSamples = std::size_t{1} << 22;

AngleLift angle_lift(const FrontalFrame& frame);

/// (theta(2pi) - theta(0)) / 2pi, which must be a multiple of 1/2 to within 1e-6.
HalfInteger rotation_index(const AngleLift& lift);

/// True iff every great hypersphere with the given unit normals meets e([0, 2pi]).
bool hypersphere_crossing_check(const FrontalFrame& frame, std::span<const Vector> normals);

/// Same, with `trials` uniformly random normals. Requires a non-co-orientable frame.
bool hypersphere_crossing_check(const FrontalFrame& frame, int trials, std::uint64_t seed);

}  // namespace frontal
