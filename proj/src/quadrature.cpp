#include "frontal/quadrature.hpp"

#include <numbers>

namespace frontal::quad {

namespace {

template <int n>
BasicRule<n> build_rule() {
    BasicRule<n> rule{};
    for (int i = 0; i < n / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

}  // namespace

const Rule& gauss_legendre_16() {
    static const Rule rule = build_rule<16>();
    return rule;
}

const BasicRule<8>& gauss_legendre_8() {
    static const BasicRule<8> rule = build_rule<8>();
    return rule;
}

}  // namespace frontal::quad
