#include "frontal/error.hpp"
#include "frontal/quadrature.hpp"
#include "frontal/trig_poly.hpp"
#include "frontal/types.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace frontal;

namespace {

TrigPoly random_poly(std::mt19937_64& rng, std::size_t degree, bool anti) {
    std::normal_distribution<double> g;
    std::vector<double> c(degree), s(degree);
    for (auto& v : c) v = g(rng);
    for (auto& v : s) v = g(rng);
    return TrigPoly(anti ? 0.0 : g(rng), c, s, anti);
}

}  // namespace

TEST(TrigPoly, EvaluatesTerms) {
    const TrigPoly p(0.5, {2.0, 0.0}, {0.0, -1.0});
    const double t = 0.7;
    EXPECT_NEAR(p(t), 0.5 + 2 * std::cos(t) - std::sin(2 * t), 1e-15);
    EXPECT_NEAR(p.derivative_at(t, 1), -2 * std::sin(t) - 2 * std::cos(2 * t), 1e-14);
    EXPECT_NEAR(p.derivative_at(t, 3), 2 * std::sin(t) + 8 * std::cos(2 * t), 1e-13);
}

TEST(TrigPoly, DerivativesMatchFiniteDifferences) {
    std::mt19937_64 rng(3);
    for (bool anti : {false, true}) {
        const TrigPoly p = random_poly(rng, 6, anti);
        for (double t : {0.0, 1.3, 4.9}) {
            for (int j = 1; j <= 4; ++j) {
                const double h = 1e-3;
                auto f = [&](double s) { return p.derivative_at(s, j - 1); };
                const double fd = (8 * (f(t + h) - f(t - h)) - (f(t + 2 * h) - f(t - 2 * h))) / (12 * h);
                const double exact = p.derivative_at(t, j);
                EXPECT_NEAR(fd, exact, 1e-7 * (1 + std::abs(exact))) << "order " << j;
            }
        }
    }
}

TEST(TrigPoly, DerivativePolyAgreesWithPointwise) {
    std::mt19937_64 rng(11);
    const TrigPoly p = random_poly(rng, 5, false);
    const TrigPoly d = p.derivative();
    EXPECT_EQ(d.degree(), p.degree());
    for (double t = 0; t < 6.3; t += 0.37) EXPECT_NEAR(d(t), p.derivative_at(t, 1), 1e-12);
}

TEST(TrigPoly, TaylorPacksDerivatives) {
    std::mt19937_64 rng(5);
    const TrigPoly p = random_poly(rng, 4, true);
    const Taylor tay = p.taylor(2.1);
    double fact = 1.0;
    for (int k = 0; k <= 4; ++k) {
        if (k > 0) fact *= k;
        EXPECT_NEAR(tay[k] * fact, p.derivative_at(2.1, k), 1e-11);
    }
}

TEST(TrigPoly, Periodicity) {
    std::mt19937_64 rng(9);
    const TrigPoly p = random_poly(rng, 7, false);
    const TrigPoly q = random_poly(rng, 7, true);
    for (double t : {0.1, 2.0, 5.5}) {
        EXPECT_NEAR(p(t + kTwoPi), p(t), 1e-12);
        EXPECT_NEAR(q(t + kTwoPi), -q(t), 1e-12);
    }
}

TEST(TrigPoly, AntiperiodicConstantRejected) {
    try {
        TrigPoly(1.0, {1.0}, {}, true);
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::spec);
    }
}

TEST(Quadrature, GaussLegendreExactOnPolynomials) {
    const auto& r = quad::gauss_legendre_16();
    double wsum = 0;
    for (double w : r.weights) wsum += w;
    EXPECT_NEAR(wsum, 2.0, 1e-14);
    for (int k = 0; k <= 31; ++k) {
        const double v = quad::panel([k](double x) { return std::pow(x, k); }, -1.0, 1.0);
        const double exact = k % 2 ? 0.0 : 2.0 / (k + 1);
        EXPECT_NEAR(v, exact, 1e-14) << k;
    }
    const auto& r8 = quad::gauss_legendre_8();
    for (int k = 0; k <= 15; ++k) {
        double v = 0;
        for (std::size_t i = 0; i < 8; ++i) v += r8.weights[i] * std::pow(r8.nodes[i], k);
        EXPECT_NEAR(v, k % 2 ? 0.0 : 2.0 / (k + 1), 1e-14) << k;
    }
}

TEST(Quadrature, NodesAvoidEndpoints) {
    bool touched = false;
    quad::integrate([&](double x) {
        if (x == 0.0 || x == 1.0 || x == 0.5) touched = true;
        return 1.0 / std::sqrt(std::abs(x - 0.5) + 1e-300);
    }, std::vector<double>{0.0, 0.5, 1.0}, 1e-3, 1u << 12);
    EXPECT_FALSE(touched);
}

TEST(Quadrature, AdaptiveHandlesKink) {
    const std::vector<double> bp{0.0, 1.0 / 3.0, 2.0};
    const auto r = quad::integrate([](double x) { return std::abs(x - 1.0 / 3.0); }, bp, 1e-12);
    EXPECT_NEAR(r.value, (1.0 / 9.0 + 25.0 / 9.0) / 2.0, 1e-13);
    const auto s = quad::integrate([](double x) { return std::exp(std::sin(7 * x)); }, 0.0, kTwoPi, 1e-11);
    // 2pi I_0(1)
    EXPECT_NEAR(s.value, kTwoPi * std::cyl_bessel_i(0.0, 1.0), 1e-9);
    EXPECT_LE(s.error, 1e-11);
}

TEST(Quadrature, ExhaustedBudgetCarriesEstimate) {
    try {
        quad::integrate([](double x) { return std::sin(1.0 / (x + 1e-6)); }, 0.0, 1.0, 1e-14, 64);
        FAIL();
    } catch (const AccuracyError& e) {
        EXPECT_EQ(e.kind(), ErrorKind::accuracy);
        EXPECT_TRUE(std::isfinite(e.best_estimate()));
        EXPECT_GT(e.error_estimate(), 0.0);
    }
}

TEST(HalfInteger, Text) {
    EXPECT_EQ(HalfInteger::from_twice(1).str(), "1/2");
    EXPECT_EQ(HalfInteger::from_twice(-3).str(), "-3/2");
    EXPECT_EQ(HalfInteger::nearest(2.0).str(), "2");
    EXPECT_DOUBLE_EQ(HalfInteger::nearest(-0.49).value(), -0.5);
}
