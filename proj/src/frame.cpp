#include "frontal/frame.hpp"

#include "frontal/error.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

namespace frontal {

namespace {

// Half-width of the window around a singular point inside which e is
// evaluated from the factored jet x(t) = gamma'(t) / (t - c)^r.
double expansion_window(int order) {
    switch (order) {
        case 1: return 1e-6;
        case 2: return 1e-4;
        default: return 1e-3;
    }
}

// Coefficient (r+j)! for the factored series x(c + s) = sum_j gamma^(r+1+j)(c) s^j / (r+j)!.
double factorial(int k) {
    double f = 1.0;
    for (int i = 2; i <= k; ++i) f *= i;
    return f;
}

TangentJet normalize(const Vector& w, const Vector& dw, double sign) {
    const double norm = w.norm();
    const Vector hat = w / norm;
    TangentJet out;
    out.e = sign * hat;
    out.de = sign * (dw - hat.dot(dw) * hat) / norm;
    return out;
}

double angle_between(const Vector& a, const Vector& b) {
    const double c = a.dot(b) / (a.norm() * b.norm());
    return std::acos(std::clamp(c, -1.0, 1.0));
}

}  // namespace

FrontalFrame::FrontalFrame(ClosedCurve curve, std::vector<SingularPoint> singular)
    : curve_(std::move(curve)), singular_(std::move(singular)) {
    std::sort(singular_.begin(), singular_.end(), [](const auto& a, const auto& b) { return a.t < b.t; });
    for (const auto& p : singular_) {
        if (p.order < 1 || p.order > 3) {
            throw Error(ErrorKind::precondition, "singular point without a known finite order");
        }
    }

    const double lo = curve_.domain_lo();
    const double hi = curve_.domain_hi();
    int sign = 1;
    double start = lo;
    int parity = 1;
    for (const auto& p : singular_) {
        const int flip = (p.order % 2 == 1) ? -1 : 1;
        parity *= flip;
        if (p.t > start) {
            intervals_.push_back({start, p.t, sign});
            sign *= flip;
        }
        // A singular point at the very start only affects the wrap-around.
        start = p.t;
        right_sign_.push_back(sign);
        local_jets_.push_back(curve_.derivative_jet(p.t, kMaxJetOrder));
    }
    intervals_.push_back({start, hi, sign});
    co_orientable_ = !curve_.is_periodic() || parity == 1;

    // Compare first-order extrapolations of e from both sides of each
    // singular point, using the plain sign * T formula.
    constexpr double kOffset = 1e-5;
    for (const auto& p : singular_) {
        if (!curve_.is_periodic() && (p.t - kOffset < lo || p.t + kOffset > hi)) continue;
        const double left_t = p.t - kOffset;
        const double right_t = p.t + kOffset;
        const double wrap = co_orientable_ ? 1.0 : -1.0;
        auto one_sided = [&](double t) {
            double s = t;
            double factor = 1.0;
            if (curve_.is_periodic()) {
                if (s < 0.0) {
                    s += kTwoPi;
                    factor = wrap;
                } else if (s >= kTwoPi) {
                    s -= kTwoPi;
                    factor = wrap;
                }
            }
            TangentJet j = direct(s);
            j.e *= factor;
            j.de *= factor;
            return j;
        };
        const TangentJet left = one_sided(left_t);
        const TangentJet right = one_sided(right_t);
        const Vector from_left = left.e + kOffset * left.de;
        const Vector from_right = right.e - kOffset * right.de;
        const double gap = angle_between(from_left, from_right);
        max_gap_ = std::max(max_gap_, gap);
        const double allowed = p.order == 1 ? 1e-6 : 1e-3;
        if (gap > allowed) {
            throw Error(ErrorKind::frame_construction,
                        "unit tangent field is discontinuous at t = " + std::to_string(p.t) + " (gap " +
                            std::to_string(gap) + " rad); vanishing order misdetected?");
        }
    }
}

int FrontalFrame::sign_in(double s) const {
    for (const auto& iv : intervals_) {
        if (s < iv.hi) return iv.epsilon;
    }
    return intervals_.back().epsilon;
}

TangentJet FrontalFrame::direct(double s) const {
    const Jet j = curve_.derivative_jet(s, 2);
    return normalize(j[1], j[2], sign_in(s));
}

bool FrontalFrame::is_singular(double t) const {
    const double s = curve_.is_periodic() ? wrap_two_pi(t) : t;
    return std::any_of(singular_.begin(), singular_.end(), [&](const auto& p) { return p.t == s; });
}

double FrontalFrame::distance_to_singular(double t) const {
    double best = std::numeric_limits<double>::infinity();
    for (const auto& p : singular_) {
        double d = std::abs(t - p.t);
        if (curve_.is_periodic()) {
            d = std::fmod(d, kTwoPi);
            d = std::min(d, kTwoPi - d);
        }
        best = std::min(best, d);
    }
    return best;
}

TangentJet FrontalFrame::tangent(double t) const {
    double s = t;
    double factor = 1.0;
    if (curve_.is_periodic()) {
        double tau = std::fmod(t, 2.0 * kTwoPi);
        if (tau < 0.0) tau += 2.0 * kTwoPi;
        if (tau >= kTwoPi) {
            tau -= kTwoPi;
            if (!co_orientable_) factor = -1.0;
        }
        s = std::clamp(tau, 0.0, std::nextafter(kTwoPi, 0.0));
    }

    for (std::size_t k = 0; k < singular_.size(); ++k) {
        const SingularPoint& p = singular_[k];
        double offset = s - p.t;
        double local = factor;
        if (curve_.is_periodic()) {
            if (offset > kPi) {
                offset -= kTwoPi;
                if (!co_orientable_) local = -local;
            } else if (offset < -kPi) {
                offset += kTwoPi;
                if (!co_orientable_) local = -local;
            }
        }
        if (std::abs(offset) > expansion_window(p.order)) continue;
        const Jet& jet = local_jets_[k];
        const int r = p.order;
        Vector x = Vector::Zero(curve_.dimension());
        Vector dx = Vector::Zero(curve_.dimension());
        for (int j = 0; r + 1 + j <= kMaxJetOrder; ++j) {
            const Vector coeff = jet[r + 1 + j] / factorial(r + j);
            x += coeff * std::pow(offset, j);
            if (j >= 1) dx += coeff * (j * std::pow(offset, j - 1));
        }
        return normalize(x, dx, local * right_sign_[k]);
    }

    TangentJet out = direct(s);
    out.e *= factor;
    out.de *= factor;
    return out;
}

Vector FrontalFrame::e(double t) const { return tangent(t).e; }

int FrontalFrame::singular_between(double a, double b) const {
    int count = 0;
    for (const auto& p : singular_) {
        if (!curve_.is_periodic()) {
            count += (p.t > a && p.t < b) ? 1 : 0;
            continue;
        }
        // Lifted copies c + 2pi k inside (a, b).
        const double first = std::ceil((a - p.t) / kTwoPi);
        for (double k = first; p.t + k * kTwoPi < b; k += 1.0) {
            if (p.t + k * kTwoPi > a) ++count;
        }
    }
    return count;
}

int FrontalFrame::cusps_between(double a, double b) const {
    int count = 0;
    for (const auto& p : singular_) {
        if (!p.is_cusp) continue;
        if (!curve_.is_periodic()) {
            count += (p.t > a && p.t < b) ? 1 : 0;
            continue;
        }
        const double first = std::ceil((a - p.t) / kTwoPi);
        for (double k = first; p.t + k * kTwoPi < b; k += 1.0) {
            if (p.t + k * kTwoPi > a) ++count;
        }
    }
    return count;
}

FrontalFrame build_frame(const ClosedCurve& curve, std::vector<SingularPoint> singular) {
    return FrontalFrame(curve, std::move(singular));
}

FrontalFrame build_frame(const ClosedCurve& curve) { return FrontalFrame(curve, find_singular_points(curve)); }

std::vector<RegularInterval> sign_trace(const FrontalFrame& frame) {
    return {frame.intervals().begin(), frame.intervals().end()};
}

// ---------------------------------------------------------------------------
// Angle lift

AngleLift::AngleLift(FrontalFrame frame, std::vector<double> t, std::vector<double> theta)
    : frame_(std::move(frame)), t_(std::move(t)), theta_(std::move(theta)) {}

double AngleLift::theta(double t) const {
    auto it = std::upper_bound(t_.begin(), t_.end(), t);
    std::size_t i = (it == t_.begin()) ? 0 : static_cast<std::size_t>(it - t_.begin()) - 1;
    i = std::min(i, t_.size() - 1);
    const Vector a = frame_.e(t_[i]);
    const Vector b = frame_.e(t);
    return theta_[i] + std::atan2(det2(a, b), a.dot(b));
}

AngleLift angle_lift(const FrontalFrame& frame) {
    if (frame.dimension() != 2) throw Error(ErrorKind::dimension, "angle function exists for planar curves only");

    const double lo = frame.curve().domain_lo();
    const double hi = frame.curve().domain_hi();
    constexpr int kInitial = 1024;
    const double cos_limit = std::cos(kPi / 3.0);

    std::vector<double> ts;
    std::vector<Vector> es;
    ts.push_back(lo);
    es.push_back(frame.e(lo));

    struct Pending {
        double t;
        Vector e;
        int depth;
    };
    for (int k = 1; k <= kInitial; ++k) {
        const double tb = (k == kInitial) ? hi : lo + (hi - lo) * k / kInitial;
        // Depth-first refinement of [ts.back(), tb].
        std::vector<Pending> stack{{tb, frame.e(tb), 0}};
        while (!stack.empty()) {
            const Pending& top = stack.back();
            const double ta = ts.back();
            const Vector& ea = es.back();
            if (ea.dot(top.e) > cos_limit || top.depth > 60) {
                ts.push_back(top.t);
                es.push_back(top.e);
                stack.pop_back();
                continue;
            }
            const double tm = 0.5 * (ta + top.t);
            const int depth = top.depth + 1;
            stack.push_back({tm, frame.e(tm), depth});
            if (ts.size() + stack.size() > kMaxLiftSamples) {
                throw Error(ErrorKind::pathological_curve, "angle lift needs more than 2^22 samples");
            }
        }
    }

    std::vector<double> theta(ts.size());
    theta[0] = std::atan2(es[0][1], es[0][0]);
    for (std::size_t i = 1; i < ts.size(); ++i) {
        theta[i] = theta[i - 1] + std::atan2(det2(es[i - 1], es[i]), es[i - 1].dot(es[i]));
    }
    return AngleLift(frame, std::move(ts), std::move(theta));
}

HalfInteger rotation_index(const AngleLift& lift) {
    const double turns = lift.total_change() / kTwoPi;
    const HalfInteger index = HalfInteger::nearest(turns);
    const double residual = std::abs(turns - index.value());
    if (!(residual < 1e-6)) {
        throw Error(ErrorKind::lift_inconsistency,
                    "angle change is not a multiple of pi (residual " + std::to_string(residual) + ")");
    }
    return index;
}

// ---------------------------------------------------------------------------
// Great hyperspheres

bool hypersphere_crossing_check(const FrontalFrame& frame, std::span<const Vector> normals) {
    constexpr int kGrid = 4096;
    std::vector<Vector> es;
    es.reserve(kGrid + 1);
    for (int i = 0; i <= kGrid; ++i) es.push_back(frame.e(kTwoPi * i / kGrid));
    for (const Vector& xi : normals) {
        if (xi.size() != frame.dimension() || !(xi.norm() > 0.0)) {
            throw Error(ErrorKind::spec, "great hypersphere normal must be a nonzero vector of the curve dimension");
        }
        bool crossed = false;
        double prev = es[0].dot(xi);
        if (prev == 0.0) crossed = true;
        for (std::size_t i = 1; i < es.size() && !crossed; ++i) {
            const double f = es[i].dot(xi);
            if (f == 0.0 || (f > 0.0) != (prev > 0.0)) crossed = true;
            prev = f;
        }
        if (!crossed) return false;
    }
    return true;
}

bool hypersphere_crossing_check(const FrontalFrame& frame, int trials, std::uint64_t seed) {
    if (frame.co_orientable()) {
        throw Error(ErrorKind::precondition, "hypersphere crossing check needs a non-co-orientable frame");
    }
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> normal;
    std::vector<Vector> normals;
    normals.reserve(static_cast<std::size_t>(std::max(trials, 0)));
    for (int k = 0; k < trials; ++k) {
        Vector xi(frame.dimension());
        do {
            for (int i = 0; i < xi.size(); ++i) xi[i] = normal(rng);
        } while (!(xi.norm() > 1e-12));
        normals.push_back(xi / xi.norm());
    }
    return hypersphere_crossing_check(frame, normals);
}

}  // namespace frontal
