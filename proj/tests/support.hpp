#pragma once

#include "frontal/curve.hpp"

#include <cmath>
#include <functional>
#include <random>

namespace testsupport {

using frontal::Vector;

// Five-point central difference of g at t.
inline Vector fd5(const std::function<Vector(double)>& g, double t, double h) {
    return (8.0 * (g(t + h) - g(t - h)) - (g(t + 2 * h) - g(t - 2 * h))) / (12.0 * h);
}

// Composite Simpson with n (even) intervals.
inline double simpson(const std::function<double(double)>& f, double a, double b, int n) {
    const double h = (b - a) / n;
    double s = f(a) + f(b);
    for (int i = 1; i < n; ++i) s += f(a + i * h) * (i % 2 ? 4.0 : 2.0);
    return s * h / 3.0;
}

inline frontal::ClosedCurve hypocycloid(int m, int dim = 2) {
    return frontal::make_family("hypocycloid", {{"m", static_cast<double>(m)}}, dim);
}

inline frontal::ClosedCurve eye(double a) { return frontal::make_family("eye", {{"a", a}}); }

// The eye integrand (a/2) F/G written out from the closed form.
inline double eye_density(double t, double a) {
    const double s2 = std::sin(t) * std::sin(t);
    const double h = 4 * std::pow(s2, 4) + 4 * std::pow(s2, 3) + 5 * s2 * s2 + 2 * s2 + 1;
    const double g = h + 4 * a * a * s2 * (-s2 * s2 * s2 - s2 * s2 + s2 + 1);
    const double c2 = std::cos(2 * t);
    const double f = std::abs(3 * c2 - 1) * (5 - 3 * c2);
    return 0.5 * a * f / g;
}

inline double eye_M() {
    auto fh = [](double t) {
        const double s2 = std::sin(t) * std::sin(t);
        const double h = 4 * std::pow(s2, 4) + 4 * std::pow(s2, 3) + 5 * s2 * s2 + 2 * s2 + 1;
        const double c2 = std::cos(2 * t);
        return std::abs(3 * c2 - 1) * (5 - 3 * c2) / h;
    };
    // |3cos2t - 1| kinks where cos 2t = 1/3; integrate piecewise.
    const double k = 0.5 * std::acos(1.0 / 3.0);
    const double pts[] = {0.0, k, M_PI - k, M_PI + k, 2 * M_PI - k, 2 * M_PI};
    double sum = 0.0;
    for (int i = 0; i < 5; ++i) sum += simpson(fh, pts[i], pts[i + 1], 200000);
    return sum;
}

}  // namespace testsupport
