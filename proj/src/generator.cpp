#include "frontal/generator.hpp"

#include "frontal/error.hpp"
#include "frontal/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <random>

namespace frontal {

namespace {

constexpr int kProjectionPanels = 256;
constexpr int kGrid = 4096;

TrigPoly random_poly(std::mt19937_64& rng, int degree, bool antiperiodic, bool with_constant) {
    std::normal_distribution<double> normal;
    std::vector<double> c(static_cast<std::size_t>(degree));
    std::vector<double> s(static_cast<std::size_t>(degree));
    const double constant = with_constant && !antiperiodic ? normal(rng) : 0.0;
    for (int k = 0; k < degree; ++k) {
        const double decay = 1.0 / (k + 1);
        c[static_cast<std::size_t>(k)] = normal(rng) * decay;
        s[static_cast<std::size_t>(k)] = normal(rng) * decay;
    }
    return TrigPoly(constant, std::move(c), std::move(s), antiperiodic);
}

Eigen::MatrixXd random_plane(std::mt19937_64& rng, int n) {
    std::normal_distribution<double> normal;
    Eigen::MatrixXd g(n, 2);
    for (int i = 0; i < n; ++i) {
        g(i, 0) = normal(rng);
        g(i, 1) = normal(rng);
    }
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(g);
    Eigen::MatrixXd q = qr.householderQ() * Eigen::MatrixXd::Identity(n, 2);
    return q;
}

// Periodic part of theta for the requested monotonicity, scaled from a raw draw.
TrigPoly shape_angle(const GeneratorSpec& spec, TrigPoly raw) {
    const double index = spec.index.value();
    const TrigPoly d = raw.derivative();
    if (spec.monotone) {
        double bound = 0.0;
        for (std::size_t k = 0; k < raw.degree(); ++k) {
            bound += raw.frequency(k) * (std::abs(raw.cos_coeffs()[k]) + std::abs(raw.sin_coeffs()[k]));
        }
        return bound > 0.0 ? raw.scaled(spec.amplitude / bound) : raw;
    }
    const double sign = index >= 0.0 ? 1.0 : -1.0;
    double lowest = 0.0;
    double largest = 0.0;
    for (int i = 0; i < kGrid; ++i) {
        const double v = d(kTwoPi * i / kGrid);
        lowest = std::min(lowest, sign * v);
        largest = std::max(largest, std::abs(v));
    }
    if (index == 0.0) return largest > 0.0 ? raw.scaled(spec.amplitude / largest) : raw;
    // min of sign * theta' becomes -amplitude.
    return lowest < 0.0 ? raw.scaled((std::abs(index) + spec.amplitude) / -lowest) : raw;
}

std::vector<std::pair<int, bool>> basis_of(int degree, bool antiperiodic) {
    // (k, is_sin); k = -1 marks the constant.
    std::vector<std::pair<int, bool>> basis;
    if (!antiperiodic) basis.push_back({-1, false});
    for (int k = 0; k < degree; ++k) {
        basis.push_back({k, false});
        basis.push_back({k, true});
    }
    return basis;
}

// Removes the components of rho that do not integrate to zero against e.
// Works in L2-orthonormal coordinates, where each functional integral(rho e_j)
// is a plain dot product with its representer.
std::optional<TrigPoly> project_rho(const TrigPoly& rho, const GeneratedBackend& shape) {
    const int n = shape.dimension();
    const bool anti = rho.antiperiodic();
    const auto basis = basis_of(static_cast<int>(rho.degree()), anti);
    const std::size_t m = basis.size();

    auto basis_value = [&](std::size_t idx, double t) {
        const auto [k, is_sin] = basis[idx];
        if (k < 0) return 1.0;
        const double w = k + (anti ? 0.5 : 1.0);
        return is_sin ? std::sin(w * t) : std::cos(w * t);
    };
    auto basis_norm = [&](std::size_t idx) { return basis[idx].first < 0 ? std::sqrt(kTwoPi) : std::sqrt(kPi); };

    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(n, static_cast<Eigen::Index>(m));
    const quad::Rule& rule = quad::gauss_legendre_16();
    const double h = kTwoPi / kProjectionPanels;
    for (int p = 0; p < kProjectionPanels; ++p) {
        const double mid = h * (p + 0.5);
        for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
            const double t = mid + 0.5 * h * rule.nodes[q];
            const double w = 0.5 * h * rule.weights[q];
            const Vector e = shape.unit_direction(t);
            for (std::size_t idx = 0; idx < m; ++idx) {
                a.col(static_cast<Eigen::Index>(idx)) += (w * basis_value(idx, t)) * e;
            }
        }
    }

    Eigen::VectorXd coeffs(static_cast<Eigen::Index>(m));
    for (std::size_t idx = 0; idx < m; ++idx) {
        const auto [k, is_sin] = basis[idx];
        double c = 0.0;
        if (k < 0) {
            c = rho.constant();
        } else {
            c = is_sin ? rho.sin_coeffs()[static_cast<std::size_t>(k)] : rho.cos_coeffs()[static_cast<std::size_t>(k)];
        }
        coeffs[static_cast<Eigen::Index>(idx)] = c * basis_norm(idx);
        a.col(static_cast<Eigen::Index>(idx)) /= basis_norm(idx);
    }
    const double before = coeffs.norm();

    // Modified Gram-Schmidt over the representers, applied twice.
    std::vector<Eigen::VectorXd> ortho;
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXd r = a.row(j).transpose();
        for (int pass = 0; pass < 2; ++pass) {
            for (const auto& q : ortho) r -= q.dot(r) * q;
        }
        const double norm = r.norm();
        if (norm > 1e-14 * (1.0 + a.norm())) ortho.push_back(r / norm);
    }
    for (int pass = 0; pass < 2; ++pass) {
        for (const auto& q : ortho) coeffs -= q.dot(coeffs) * q;
    }
    if (!(coeffs.norm() > 1e-8 * before)) return std::nullopt;

    double constant = 0.0;
    std::vector<double> c(rho.degree(), 0.0);
    std::vector<double> s(rho.degree(), 0.0);
    for (std::size_t idx = 0; idx < m; ++idx) {
        const double v = coeffs[static_cast<Eigen::Index>(idx)] / basis_norm(idx);
        const auto [k, is_sin] = basis[idx];
        if (k < 0) {
            constant = v;
        } else if (is_sin) {
            s[static_cast<std::size_t>(k)] = v;
        } else {
            c[static_cast<std::size_t>(k)] = v;
        }
    }
    TrigPoly projected(constant, std::move(c), std::move(s), anti);
    double peak = 0.0;
    for (int i = 0; i < kGrid; ++i) peak = std::max(peak, std::abs(projected(kTwoPi * i / kGrid)));
    return projected.scaled(1.0 / peak);
}

void validate(const GeneratorSpec& spec) {
    if (spec.dimension < 2) throw Error(ErrorKind::spec, "generator dimension must be at least 2");
    if (spec.degree < 1) throw Error(ErrorKind::spec, "generator degree must be at least 1");
    if (!(spec.amplitude >= 0.0) || !std::isfinite(spec.amplitude)) {
        throw Error(ErrorKind::spec, "generator amplitude must be finite and non-negative");
    }
    const bool angle_mode = spec.dimension == 2 || spec.planar;
    if (angle_mode && spec.monotone) {
        const double index = std::abs(spec.index.value());
        if (index == 0.0) throw Error(ErrorKind::spec, "a monotone angle needs a nonzero rotation index");
        if (!(spec.amplitude < index)) {
            throw Error(ErrorKind::spec, "monotone angle needs amplitude < |index| so theta' keeps its sign");
        }
    }
    if (angle_mode && !spec.monotone && !(spec.amplitude > 0.0)) {
        throw Error(ErrorKind::spec, "a non-monotone angle needs a positive amplitude");
    }
}

}  // namespace

ClosedCurve generate(const GeneratorSpec& spec) {
    validate(spec);
    std::mt19937_64 rng(spec.seed);
    const int n = spec.dimension;
    const bool angle_mode = n == 2 || spec.planar;

    for (int attempt = 0; attempt < kGeneratorRetries; ++attempt) {
        GeneratedBackend parts;
        parts.base = Vector::Zero(n);
        bool antiperiodic = false;
        if (angle_mode) {
            GeneratedBackend::Angle angle;
            angle.slope = spec.index.value();
            angle.periodic = shape_angle(spec, random_poly(rng, spec.degree, false, false));
            angle.plane = (n == 2) ? Eigen::MatrixXd::Identity(2, 2) : random_plane(rng, n);
            parts.angle = std::move(angle);
            antiperiodic = !spec.index.is_integer();
        } else {
            antiperiodic = !spec.co_orientable;
            for (int i = 0; i < n; ++i) parts.direction.push_back(random_poly(rng, spec.degree, antiperiodic, true));
            double lo = std::numeric_limits<double>::infinity();
            double hi = 0.0;
            for (int k = 0; k < kGrid; ++k) {
                const double t = kTwoPi * k / kGrid;
                Vector v(n);
                for (int i = 0; i < n; ++i) v[i] = parts.direction[static_cast<std::size_t>(i)](t);
                lo = std::min(lo, v.norm());
                hi = std::max(hi, v.norm());
            }
            if (!(lo > 0.05 * hi)) continue;
        }
        const TrigPoly raw_rho = random_poly(rng, spec.degree + 2, antiperiodic, true);
        const auto rho = project_rho(raw_rho, parts);
        if (!rho) continue;
        parts.rho = *rho;
        return make_generated(std::move(parts));
    }
    throw Error(ErrorKind::generation, "generator retries exhausted (seed " + std::to_string(spec.seed) + ")");
}

double closure_residual(const ClosedCurve& curve) {
    const GeneratedBackend* g = curve.generated();
    if (!g) throw Error(ErrorKind::precondition, "closure residual is defined for generated curves");
    return (g->table.back() - g->table.front()).norm();
}

}  // namespace frontal
