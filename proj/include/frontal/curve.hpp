#pragma once

#include "frontal/trig_poly.hpp"
#include "frontal/types.hpp"

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace frontal {

/// Derivatives 0..order of a curve at one parameter; column j is the j-th derivative.
struct Jet {
    int order = 0;
    Eigen::MatrixXd values;

    int dimension() const { return static_cast<int>(values.rows()); }
    Vector operator[](int j) const { return values.col(j); }
};

inline constexpr int kMaxJetOrder = 4;

enum class Family { circle, ellipse, hypocycloid, eye, model_cusp };

std::string_view family_name(Family family);
std::optional<Family> parse_family(std::string_view name);

using Params = std::map<std::string, double>;

struct FourierBackend {
    std::vector<TrigPoly> coords;
};

struct FamilyBackend {
    Family family;
    Params params;  // fully resolved, defaults filled in
};

// Curve defined by its velocity gamma' = rho * e, with e either
//   e = cos(theta) u1 + sin(theta) u2,  theta = slope * t + periodic(t)
// (angle mode, u1/u2 orthonormal columns of `plane`) or
//   e = v / |v| with v given per coordinate (direction mode).
// Positions are tabulated by cumulative quadrature.
struct GeneratedBackend {
    struct Angle {
        double slope = 1.0;
        TrigPoly periodic;
        Eigen::MatrixXd plane;  // n x 2
    };

    std::optional<Angle> angle;
    std::vector<TrigPoly> direction;
    TrigPoly rho;
    Vector base;

    static constexpr int kPanels = 4096;
    std::vector<Vector> table;  // gamma at the kPanels + 1 panel boundaries

    int dimension() const { return static_cast<int>(base.size()); }
    Vector unit_direction(double t) const;
    /// Taylor series of each coordinate of gamma' = rho * e at t.
    std::vector<Taylor> velocity_series(double t) const;
    Vector velocity(double t) const;
};

// Parametrized curve with period 2pi (or, for the model-cusp germ only, an
// open parameter interval). Immutable after construction.
class ClosedCurve {
public:
    using Backend = std::variant<FourierBackend, FamilyBackend, std::shared_ptr<const GeneratedBackend>>;

    int dimension() const { return dimension_; }
    const Backend& backend() const { return backend_; }

    bool is_periodic() const { return periodic_; }
    double domain_lo() const { return domain_lo_; }
    double domain_hi() const { return domain_hi_; }

    /// Diameter of the sampled image; the length unit for scale-relative tolerances.
    double scale() const { return scale_; }

    Jet eval_jet(double t, int order) const;
    /// Like eval_jet but skips the position: column 0 is NaN. Generated curves
    /// get their position by quadrature, which derivative-only callers do not need.
    Jet derivative_jet(double t, int order) const;
    Vector position(double t) const;
    Vector velocity(double t) const;

    const FamilyBackend* family() const { return std::get_if<FamilyBackend>(&backend_); }
    const FourierBackend* fourier() const { return std::get_if<FourierBackend>(&backend_); }
    const GeneratedBackend* generated() const;

private:
    friend ClosedCurve make_family(std::string_view, const Params&, int);
    friend ClosedCurve make_fourier(std::vector<TrigPoly>);
    friend ClosedCurve make_generated(GeneratedBackend);

    ClosedCurve(int dimension, Backend backend, bool periodic, double lo, double hi);
    void compute_scale();
    Jet jet_impl(double t, int order, bool with_position) const;

    int dimension_ = 2;
    Backend backend_;
    bool periodic_ = true;
    double domain_lo_ = 0.0;
    double domain_hi_ = kTwoPi;
    double scale_ = 1.0;
};

Jet eval_jet(const ClosedCurve& curve, double t, int order);

/// Named analytic family. Planar formulas; `dimension` > 2 embeds the curve in
/// the first two coordinates of R^n.
ClosedCurve make_family(std::string_view name, const Params& params, int dimension = 2);

ClosedCurve make_fourier(std::vector<TrigPoly> coords);

/// Validates the parts, tabulates positions and returns the curve.
ClosedCurve make_generated(GeneratedBackend parts);

}  // namespace frontal
