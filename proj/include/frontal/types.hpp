#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <numbers>
#include <string>

namespace frontal {

using Vector = Eigen::VectorXd;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// A value in (1/2)Z stored exactly as twice its value.
class HalfInteger {
public:
    constexpr HalfInteger() = default;
    static constexpr HalfInteger from_twice(int twice) { return HalfInteger(twice); }

    /// Nearest multiple of 1/2.
    static HalfInteger nearest(double value) {
        return HalfInteger(static_cast<int>(std::lround(2.0 * value)));
    }

    constexpr int twice() const { return twice_; }
    constexpr double value() const { return 0.5 * twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }
    constexpr HalfInteger operator-() const { return HalfInteger(-twice_); }
    constexpr bool operator==(const HalfInteger&) const = default;

    /// "1/2", "-3/2", "1", "0".
    std::string str() const {
        if (is_integer()) return std::to_string(twice_ / 2);
        return std::to_string(twice_) + "/2";
    }

private:
    constexpr explicit HalfInteger(int twice) : twice_(twice) {}
    int twice_ = 0;
};

/// Reduce t into [0, 2pi).
inline double wrap_two_pi(double t) {
    double r = std::fmod(t, kTwoPi);
    if (r < 0.0) r += kTwoPi;
    if (r >= kTwoPi) r = 0.0;
    return r;
}

/// Planar determinant of the first two coordinates.
inline double det2(const Vector& a, const Vector& b) {
    return a[0] * b[1] - a[1] * b[0];
}

}  // namespace frontal
