#include "frontal/trig_poly.hpp"

#include "frontal/error.hpp"

#include <cmath>
#include <utility>

namespace frontal {

TrigPoly::TrigPoly(double constant, std::vector<double> cos_coeffs, std::vector<double> sin_coeffs,
                   bool antiperiodic)
    : constant_(constant), cos_(std::move(cos_coeffs)), sin_(std::move(sin_coeffs)),
      antiperiodic_(antiperiodic) {
    if (cos_.size() < sin_.size()) cos_.resize(sin_.size(), 0.0);
    if (sin_.size() < cos_.size()) sin_.resize(cos_.size(), 0.0);
    if (antiperiodic_ && constant_ != 0.0) {
        throw Error(ErrorKind::spec, "antiperiodic trigonometric polynomial cannot have a constant term");
    }
}

namespace {

// cos(w_k t), sin(w_k t) for consecutive frequencies w_k = w_0 + k by angle addition.
struct Rotor {
    double c, s, step_c, step_s;
    Rotor(double w0, double t) : c(std::cos(w0 * t)), s(std::sin(w0 * t)), step_c(std::cos(t)), step_s(std::sin(t)) {}
    void advance() {
        const double nc = c * step_c - s * step_s;
        s = s * step_c + c * step_s;
        c = nc;
    }
};

}  // namespace

double TrigPoly::derivative_at(double t, int order) const {
    // d^j/dt^j [a cos(wt) + b sin(wt)] cycles through (a, b) -> (b w, -a w).
    double sum = order == 0 ? constant_ : 0.0;
    if (cos_.empty()) return sum;
    Rotor rot(frequency(0), t);
    for (std::size_t k = 0; k < cos_.size(); ++k, rot.advance()) {
        const double w = frequency(k);
        double a = cos_[k];
        double b = sin_[k];
        for (int j = 0; j < order; ++j) {
            const double na = b * w;
            const double nb = -a * w;
            a = na;
            b = nb;
        }
        sum += a * rot.c + b * rot.s;
    }
    return sum;
}

Taylor TrigPoly::taylor(double t) const {
    Taylor r(constant_);
    if (cos_.empty()) return r;
    Rotor rot(frequency(0), t);
    for (std::size_t k = 0; k < cos_.size(); ++k, rot.advance()) {
        const double w = frequency(k);
        const double c = rot.c;
        const double s = rot.s;
        double a = cos_[k];
        double b = sin_[k];
        double inv_fact = 1.0;
        for (std::size_t j = 0; j < Taylor::kSize; ++j) {
            if (j > 0) inv_fact /= static_cast<double>(j);
            r[j] += inv_fact * (a * c + b * s);
            const double na = b * w;
            const double nb = -a * w;
            a = na;
            b = nb;
        }
    }
    return r;
}

TrigPoly TrigPoly::derivative() const {
    std::vector<double> dc(cos_.size());
    std::vector<double> ds(sin_.size());
    for (std::size_t k = 0; k < cos_.size(); ++k) {
        const double w = frequency(k);
        dc[k] = sin_[k] * w;
        ds[k] = -cos_[k] * w;
    }
    return TrigPoly(0.0, std::move(dc), std::move(ds), antiperiodic_);
}

TrigPoly TrigPoly::scaled(double s) const {
    std::vector<double> c = cos_;
    std::vector<double> d = sin_;
    for (auto& v : c) v *= s;
    for (auto& v : d) v *= s;
    return TrigPoly(constant_ * s, std::move(c), std::move(d), antiperiodic_);
}

}  // namespace frontal
