#pragma once

#include "frontal/curve.hpp"

#include <cstdint>

namespace frontal {

// Random closed frontal built angle-first: e is chosen exactly, then the
// speed rho is projected so that gamma' = rho * e integrates to zero over a
// period.
struct GeneratorSpec {
    int dimension = 2;
    /// Rotation index for angle-mode curves (planar, or planar-embedded in R^n).
    HalfInteger index = HalfInteger::from_twice(1);
    /// n >= 3 direction mode only: whether e(t + 2pi) = e(t).
    bool co_orientable = false;
    /// n >= 3: build the angle-mode curve inside a random 2-plane instead of a spatial e.
    bool planar = false;
    int degree = 3;
    /// Monotone mode: bound on |theta' - index|. Otherwise: how far theta' is pushed past zero.
    double amplitude = 0.3;
    bool monotone = true;
    std::uint64_t seed = 0;
};

inline constexpr int kGeneratorRetries = 16;

/// Throws a spec error for an invalid spec and a generation error when every retry degenerates.
ClosedCurve generate(const GeneratorSpec& spec);

/// |integral of rho e over one period|, i.e. gamma(2pi) - gamma(0). Generated curves only.
double closure_residual(const ClosedCurve& curve);

}  // namespace frontal
