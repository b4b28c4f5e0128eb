#pragma once

#include "frontal/error.hpp"

#include <array>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace frontal::quad {

template <int N>
struct BasicRule {
    std::array<double, N> nodes;    // on [-1, 1]
    std::array<double, N> weights;
};
using Rule = BasicRule<16>;

/// 16-point Gauss-Legendre rule, computed once by Newton iteration on P_16.
const Rule& gauss_legendre_16();
const BasicRule<8>& gauss_legendre_8();

/// Single 16-node panel on [a, b]. Nodes are interior, never a or b.
template <class F>
double panel(const F& f, double a, double b) {
    const Rule& rule = gauss_legendre_16();
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    return sum * half;
}

/// Composite fixed rule with `panels` equal panels.
template <class F>
double composite(const F& f, double a, double b, std::size_t panels) {
    const double h = (b - a) / static_cast<double>(panels);
    double sum = 0.0;
    for (std::size_t k = 0; k < panels; ++k) {
        const double lo = a + h * static_cast<double>(k);
        const double hi = (k + 1 == panels) ? b : lo + h;
        sum += panel(f, lo, hi);
    }
    return sum;
}

struct Result {
    double value = 0.0;
    double error = 0.0;
    std::size_t panels = 0;
};

namespace detail {

template <class F>
struct Adaptive {
    const F& f;
    double tol_per_length;
    std::size_t max_panels;
    Result result{};
    bool exhausted = false;

    void run(double a, double b, double whole) {
        const double mid = 0.5 * (a + b);
        const double left = panel(f, a, mid);
        const double right = panel(f, mid, b);
        const double refined = left + right;
        const double diff = std::abs(refined - whole);
        const bool tiny = (b - a) <= 1e-13 * (1.0 + std::abs(a));
        if (diff <= tol_per_length * (b - a) || tiny || exhausted) {
            result.value += refined;
            result.error += diff;
            result.panels += 2;
            return;
        }
        if (result.panels + 4 > max_panels) {
            exhausted = true;
        }
        run(a, mid, left);
        run(mid, b, right);
    }
};

}  // namespace detail

// Adaptive composite Gauss-Legendre over consecutive breakpoints
// (sorted, first = lower limit, last = upper limit). A panel is bisected
// while its coarse and refined estimates disagree by more than its share of
// `tol`. Panel boundaries land exactly on every breakpoint and no node is
// ever placed on one. Summation is depth-first left to right, so the result
// does not depend on anything but the inputs.
template <class F>
Result integrate(const F& f, std::span<const double> breakpoints, double tol,
                 std::size_t max_panels = 1u << 20) {
    if (breakpoints.size() < 2) return {};
    const double length = breakpoints.back() - breakpoints.front();
    if (!(length > 0.0)) return {};
    detail::Adaptive<F> state{f, tol / length, max_panels};
    for (std::size_t i = 0; i + 1 < breakpoints.size(); ++i) {
        const double a = breakpoints[i];
        const double b = breakpoints[i + 1];
        if (!(b > a)) continue;
        state.run(a, b, panel(f, a, b));
    }
    if (state.exhausted || state.result.error > tol) {
        throw AccuracyError("adaptive quadrature exhausted its panel budget (estimate " +
                                std::to_string(state.result.value) + ", error " +
                                std::to_string(state.result.error) + ")",
                            state.result.value, state.result.error);
    }
    return state.result;
}

template <class F>
Result integrate(const F& f, double a, double b, double tol, std::size_t max_panels = 1u << 20) {
    const std::array<double, 2> bp{a, b};
    return integrate(f, std::span<const double>(bp), tol, max_panels);
}

}  // namespace frontal::quad
