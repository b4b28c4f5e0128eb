#pragma once

#include "frontal/taylor.hpp"

#include <cstddef>
#include <vector>

namespace frontal {

// Real trigonometric polynomial
//   p(t) = constant + sum_k cos_coeffs[k] cos(w_k t) + sin_coeffs[k] sin(w_k t)
// with w_k = k + 1 (2pi-periodic) or w_k = k + 1/2 (antiperiodic:
// p(t + 2pi) = -p(t), constant must be zero).
class TrigPoly {
public:
    TrigPoly() = default;
    TrigPoly(double constant, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs,
             bool antiperiodic = false);

    std::size_t degree() const { return cos_.size(); }
    double constant() const { return constant_; }
    const std::vector<double>& cos_coeffs() const { return cos_; }
    const std::vector<double>& sin_coeffs() const { return sin_; }
    bool antiperiodic() const { return antiperiodic_; }

    double frequency(std::size_t k) const {
        return static_cast<double>(k) + (antiperiodic_ ? 0.5 : 1.0);
    }

    double operator()(double t) const { return derivative_at(t, 0); }

    /// The j-th derivative evaluated at t, by term-wise differentiation.
    double derivative_at(double t, int order) const;

    /// Derivatives 0..4 at t packed as a Taylor series.
    Taylor taylor(double t) const;

    /// Term-wise derivative; same degree and periodicity.
    TrigPoly derivative() const;

    TrigPoly scaled(double s) const;

private:
    double constant_ = 0.0;
    std::vector<double> cos_;
    std::vector<double> sin_;
    bool antiperiodic_ = false;
};

}  // namespace frontal
