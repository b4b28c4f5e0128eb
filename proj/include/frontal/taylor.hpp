#pragma once

#include <array>
#include <cmath>
#include <cstddef>

namespace frontal {

// Truncated Taylor series in one variable, kept to degree 4.
// Coefficient k stores f^(k)(t0) / k!, so derivatives are recovered by
// multiplying with k!. Arithmetic propagates exact derivatives through
// closed-form expressions.
class Taylor {
public:
    static constexpr std::size_t kDegree = 4;
    static constexpr std::size_t kSize = kDegree + 1;

    constexpr Taylor() = default;
    constexpr Taylor(double constant) { c_[0] = constant; }  // NOLINT(google-explicit-constructor)

    /// The independent variable expanded at t0.
    static constexpr Taylor variable(double t0) {
        Taylor x(t0);
        x.c_[1] = 1.0;
        return x;
    }

    constexpr double operator[](std::size_t k) const { return c_[k]; }
    constexpr double& operator[](std::size_t k) { return c_[k]; }

    /// k-th derivative at the expansion point.
    double derivative(std::size_t k) const {
        static constexpr std::array<double, kSize> factorial{1.0, 1.0, 2.0, 6.0, 24.0};
        return c_[k] * factorial[k];
    }

    Taylor& operator+=(const Taylor& o) {
        for (std::size_t k = 0; k < kSize; ++k) c_[k] += o.c_[k];
        return *this;
    }
    Taylor& operator-=(const Taylor& o) {
        for (std::size_t k = 0; k < kSize; ++k) c_[k] -= o.c_[k];
        return *this;
    }
    Taylor& operator*=(double s) {
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend Taylor operator+(Taylor a, const Taylor& b) { return a += b; }
    friend Taylor operator-(Taylor a, const Taylor& b) { return a -= b; }
    friend Taylor operator-(Taylor a) { return a *= -1.0; }
    friend Taylor operator*(Taylor a, double s) { return a *= s; }
    friend Taylor operator*(double s, Taylor a) { return a *= s; }

    friend Taylor operator*(const Taylor& a, const Taylor& b) {
        Taylor r;
        for (std::size_t k = 0; k < kSize; ++k) {
            double s = 0.0;
            for (std::size_t i = 0; i <= k; ++i) s += a.c_[i] * b.c_[k - i];
            r.c_[k] = s;
        }
        return r;
    }

    friend Taylor operator/(const Taylor& a, const Taylor& b) {
        Taylor q;
        for (std::size_t k = 0; k < kSize; ++k) {
            double s = a.c_[k];
            for (std::size_t i = 1; i <= k; ++i) s -= b.c_[i] * q.c_[k - i];
            q.c_[k] = s / b.c_[0];
        }
        return q;
    }

    friend Taylor operator/(const Taylor& a, double s) { return a * (1.0 / s); }

private:
    std::array<double, kSize> c_{};
};

/// sin and cos of a series, computed together by the standard recurrence
/// s' = c u', c' = -s u'.
inline void sincos(const Taylor& u, Taylor& s, Taylor& c) {
    s = Taylor();
    c = Taylor();
    s[0] = std::sin(u[0]);
    c[0] = std::cos(u[0]);
    for (std::size_t k = 1; k < Taylor::kSize; ++k) {
        double ss = 0.0;
        double cc = 0.0;
        for (std::size_t j = 1; j <= k; ++j) {
            const double w = static_cast<double>(j) * u[j];
            ss += w * c[k - j];
            cc -= w * s[k - j];
        }
        s[k] = ss / static_cast<double>(k);
        c[k] = cc / static_cast<double>(k);
    }
}

inline Taylor sin(const Taylor& u) {
    Taylor s, c;
    sincos(u, s, c);
    return s;
}

inline Taylor cos(const Taylor& u) {
    Taylor s, c;
    sincos(u, s, c);
    return c;
}

/// Requires u[0] > 0.
inline Taylor sqrt(const Taylor& u) {
    Taylor r;
    r[0] = std::sqrt(u[0]);
    for (std::size_t k = 1; k < Taylor::kSize; ++k) {
        double s = u[k];
        for (std::size_t i = 1; i < k; ++i) s -= r[i] * r[k - i];
        r[k] = s / (2.0 * r[0]);
    }
    return r;
}

}  // namespace frontal
