#include "frontal/curve.hpp"
#include "frontal/curve_spec.hpp"
#include "frontal/error.hpp"
#include "frontal/generator.hpp"

#include "support.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace frontal;
using testsupport::fd5;

namespace {

void expect_vec(const Vector& a, std::initializer_list<double> b, double tol) {
    ASSERT_EQ(a.size(), static_cast<Eigen::Index>(b.size()));
    int i = 0;
    for (double v : b) EXPECT_NEAR(a[i++], v, tol);
}

std::vector<ClosedCurve> sample_curves() {
    std::vector<ClosedCurve> out;
    out.push_back(make_family("circle", {{"r", 2.0}}));
    out.push_back(make_family("ellipse", {{"a", 3.0}, {"b", 1.0}}));
    for (int m = 1; m <= 3; ++m) out.push_back(testsupport::hypocycloid(m));
    out.push_back(testsupport::hypocycloid(2, 3));
    for (double a : {0.01, 1.0, 10.0}) out.push_back(testsupport::eye(a));
    out.push_back(make_fourier({TrigPoly(0, {1, 0.3}, {0, 0.2}), TrigPoly(0.1, {0, -0.4}, {1, 0.1})}));
    GeneratorSpec g;
    g.seed = 4;
    out.push_back(generate(g));
    g.dimension = 3;
    g.seed = 5;
    out.push_back(generate(g));
    return out;
}

}  // namespace

TEST(Curve, CircleJet) {
    const Jet j = eval_jet(make_family("circle", {{"r", 1.0}}), 0.0, 2);
    EXPECT_EQ(j.order, 2);
    ASSERT_EQ(j.values.cols(), 3);
    expect_vec(j[0], {1, 0}, 1e-15);
    expect_vec(j[1], {0, 1}, 1e-15);
    expect_vec(j[2], {-1, 0}, 1e-15);
}

TEST(Curve, FamilyAnchors) {
    expect_vec(eval_jet(testsupport::hypocycloid(1), 0.0, 1)[1], {0, 0}, 1e-14);
    expect_vec(testsupport::eye(1.0).position(kPi / 2), {0, 0.5}, 1e-15);
    expect_vec(testsupport::hypocycloid(2).position(0.0), {5, 0}, 1e-15);
    expect_vec(testsupport::eye(1.0).position(0.0), {1, 0}, 1e-15);
}

TEST(Curve, ModelCuspIsOpenGerm) {
    const ClosedCurve c = make_family("model-cusp", {});
    EXPECT_FALSE(c.is_periodic());
    expect_vec(c.position(0.5), {0.25, 0.125}, 1e-15);
}

TEST(Curve, EmbeddingPadsZeros) {
    const ClosedCurve c = testsupport::hypocycloid(1, 4);
    EXPECT_EQ(c.dimension(), 4);
    const Jet j = c.eval_jet(0.4, 3);
    for (int k = 0; k <= 3; ++k) {
        EXPECT_EQ(j.values(2, k), 0.0);
        EXPECT_EQ(j.values(3, k), 0.0);
    }
}

TEST(Curve, FourierMatchesFamily) {
    // x = cos 2t + 2 cos t, y = sin 2t - 2 sin t
    const ClosedCurve f = make_fourier({TrigPoly(0, {2, 1}, {0, 0}), TrigPoly(0, {0, 0}, {-2, 1})});
    const ClosedCurve h = testsupport::hypocycloid(1);
    const ClosedCurve fc = make_fourier({TrigPoly(0, {1}, {0}), TrigPoly(0, {0}, {1})});
    const ClosedCurve c = make_family("circle", {{"r", 1.0}});
    for (double t = -1.0; t < 7.0; t += 0.173) {
        EXPECT_LE((f.eval_jet(t, 4).values - h.eval_jet(t, 4).values).cwiseAbs().maxCoeff(), 1e-12);
        EXPECT_LE((fc.eval_jet(t, 4).values - c.eval_jet(t, 4).values).cwiseAbs().maxCoeff(), 1e-12);
    }
}

TEST(Curve, GradientCheck) {
    // Each jet column against 5-point differences of the previous column.
    std::mt19937_64 rng(21);
    std::uniform_real_distribution<double> u(0.0, kTwoPi);
    for (const auto& c : sample_curves()) {
        for (int trial = 0; trial < 20; ++trial) {
            const double t = u(rng);
            const Jet j = c.eval_jet(t, 4);
            for (int k = 1; k <= 4; ++k) {
                const Vector fd = fd5([&](double s) { return Vector(c.eval_jet(s, k - 1)[k - 1]); }, t, 1e-4);
                const double ref = std::max(j[k].norm(), 1e-3 * c.scale());
                EXPECT_LE((fd - j[k]).norm() / ref, 1e-6) << "order " << k << " t " << t;
            }
        }
    }
}

TEST(Curve, DerivativeJetSkipsOnlyPosition) {
    for (const auto& c : sample_curves()) {
        const Jet a = c.eval_jet(1.1, 4);
        const Jet b = c.derivative_jet(1.1, 4);
        EXPECT_LE((a.values.rightCols(4) - b.values.rightCols(4)).cwiseAbs().maxCoeff(), 1e-13);
    }
}

TEST(Curve, Periodicity) {
    for (const auto& c : sample_curves()) {
        const bool generated = c.generated() != nullptr;
        for (double t : {0.3, 2.2, 5.0}) {
            const Eigen::MatrixXd d = c.eval_jet(t, 4).values - c.eval_jet(t + kTwoPi, 4).values;
            if (generated) {
                EXPECT_LE(d.col(0).norm(), 1e-10 * c.scale());
                EXPECT_LE(d.rightCols(4).cwiseAbs().maxCoeff(), 1e-9 * c.scale());
            } else {
                EXPECT_LE(d.cwiseAbs().maxCoeff(), 1e-12 * std::max(1.0, c.scale()));
            }
        }
    }
}

TEST(Curve, Errors) {
    auto kind = [](auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            return e.kind();
        }
        return ErrorKind::io;
    };
    EXPECT_EQ(kind([] { make_family("spiral", {}); }), ErrorKind::spec);
    EXPECT_EQ(kind([] { make_family("hypocycloid", {{"m", 1.5}}); }), ErrorKind::spec);
    EXPECT_EQ(kind([] { make_family("hypocycloid", {{"m", 0}}); }), ErrorKind::spec);
    EXPECT_EQ(kind([] { make_family("eye", {{"a", -1}}); }), ErrorKind::spec);
    EXPECT_EQ(kind([] { make_family("eye", {{"b", 1}}); }), ErrorKind::spec);
    EXPECT_EQ(kind([] { make_fourier({}); }), ErrorKind::spec);
    EXPECT_EQ(kind([] { testsupport::eye(1).eval_jet(0.0, 5); }), ErrorKind::unsupported_order);
    EXPECT_EQ(kind([] { curve_from_json(nlohmann::json{{"backend", "spline"}, {"dimension", 2}}); }), ErrorKind::spec);
}

TEST(Curve, SegmentIsAdmitted) {
    const ClosedCurve c = make_fourier({TrigPoly(0, {1}, {0}), TrigPoly(0, {}, {})});
    EXPECT_NEAR(c.scale(), 2.0, 1e-6);
}

TEST(CurveSpec, RoundTripIsExact) {
    for (const auto& c : sample_curves()) {
        const nlohmann::json doc = curve_to_json(c);
        const ClosedCurve back = curve_from_json(doc);
        EXPECT_EQ(curve_to_json(back), doc);
        for (double t : {0.0, 1.7, 4.4}) {
            EXPECT_EQ(c.eval_jet(t, 3).values, back.eval_jet(t, 3).values);
        }
    }
}
