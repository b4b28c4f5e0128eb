#include "frontal/verify.hpp"

#include "frontal/curve_spec.hpp"
#include "frontal/error.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <sstream>

namespace frontal {

namespace {

constexpr std::array<std::pair<TheoremId, std::string_view>, 11> kIds{{
    {TheoremId::a_bound, "A-bound"},
    {TheoremId::a_equality, "A-equality"},
    {TheoremId::b_parity, "B-parity"},
    {TheoremId::b_simplicity, "B-simplicity"},
    {TheoremId::t_length, "t-length"},
    {TheoremId::theta_prime, "theta-prime"},
    {TheoremId::sgn_boundary, "sgn-boundary"},
    {TheoremId::theta_integral, "theta-integral"},
    {TheoremId::cusp_bounds, "cusp-bounds"},
    {TheoremId::gauss_bonnet, "gauss-bonnet"},
    {TheoremId::rs_doubled, "RS-doubled"},
}};

constexpr double kThetaPrimeLimit = 1e-6;
constexpr double kGreatCircleLimit = 1e-9;

std::string num(double v) {
    std::ostringstream os;
    os.precision(17);
    os << v;
    return os.str();
}

TheoremVerdict verdict(TheoremId id, Status s, double margin, std::string details) {
    return {id, s, margin, std::move(details)};
}

TheoremVerdict skip(TheoremId id, std::string why) { return verdict(id, Status::not_applicable, 0.0, std::move(why)); }

Status status_of(bool ok) { return ok ? Status::pass : Status::fail; }

bool half_index(const AnalysisReport& r) {
    return r.index && std::abs(r.index->twice()) == 1;
}

std::uint64_t mix(std::uint64_t seed, std::uint64_t i) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (i + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

}  // namespace

std::string_view to_string(TheoremId id) {
    for (const auto& [k, name] : kIds) {
        if (k == id) return name;
    }
    return "unknown";
}

std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::not_applicable: return "not-applicable";
    }
    return "not-applicable";
}

std::optional<TheoremId> parse_theorem_id(std::string_view name) {
    for (const auto& [k, n] : kIds) {
        if (n == name) return k;
    }
    return std::nullopt;
}

std::pair<TheoremVerdict, TheoremVerdict> verify_theorem_A(const AnalysisReport& r) {
    if (r.co_orientable) {
        return {skip(TheoremId::a_bound, "co-orientable frontal; no lower bound applies"),
                skip(TheoremId::a_equality, "co-orientable frontal")};
    }
    const double band = equality_band(r.tol);
    const double margin = r.K - kPi;
    const TheoremVerdict bound = verdict(TheoremId::a_bound, status_of(margin >= -band), margin,
                                         "K = " + num(r.K) + ", pi - band = " + num(kPi - band));

    const bool at_pi = std::abs(margin) <= band;
    TheoremVerdict eq;
    if (r.dimension == 2) {
        const bool rhs = r.planar && r.l_convex && *r.l_convex != LConvexity::mixed && half_index(r);
        if (!at_pi && !rhs) {
            eq = skip(TheoremId::a_equality, "equality case not triggered (|K - pi| = " + num(std::abs(margin)) + ")");
        } else {
            const std::string lc = r.l_convex ? std::string(to_string(*r.l_convex)) : "n/a";
            const std::string idx = r.index ? r.index->str() : "n/a";
            eq = verdict(TheoremId::a_equality, status_of(at_pi == rhs), std::abs(margin),
                         "|K - pi| = " + num(std::abs(margin)) + ", l_convex = " + lc + ", index = " + idx);
        }
    } else if (at_pi) {
        eq = verdict(TheoremId::a_equality, status_of(r.planar), std::abs(margin),
                     "|K - pi| = " + num(std::abs(margin)) + ", planarity residual = " + num(r.planarity_residual));
    } else {
        eq = skip(TheoremId::a_equality, "equality case not triggered (|K - pi| = " + num(std::abs(margin)) + ")");
    }
    return {bound, eq};
}

std::pair<TheoremVerdict, TheoremVerdict> verify_theorem_B(const AnalysisReport& r) {
    const double band = equality_band(r.tol);
    std::string why;
    if (r.dimension != 2) why = "planar frontals only";
    else if (r.co_orientable) why = "co-orientable frontal";
    else if (!r.all_cusps) why = "a singular point is not a cusp";
    else if (std::abs(r.K - kPi) > band) why = "K differs from pi by " + num(std::abs(r.K - kPi));
    if (!why.empty()) return {skip(TheoremId::b_parity, why), skip(TheoremId::b_simplicity, why)};

    const int n = r.cusps;
    const TheoremVerdict parity = verdict(TheoremId::b_parity, status_of(n % 2 == 1 && n >= 3), n - 3,
                                          "N = " + std::to_string(n));
    if (!r.simple) return {parity, skip(TheoremId::b_simplicity, "self-intersections not computed")};
    const bool simple = *r.simple == Simplicity::simple;
    const bool ok = *r.simple != Simplicity::indeterminate && (n == 3) == simple;
    return {parity, verdict(TheoremId::b_simplicity, status_of(ok), 0.0,
                            "N = " + std::to_string(n) + ", simplicity = " + std::string(to_string(*r.simple)))};
}

TheoremVerdict verify_rs_doubled(const AnalysisReport& r) {
    if (r.co_orientable || !r.doubled_length) return skip(TheoremId::rs_doubled, "co-orientable frontal");
    const double band = equality_band(r.tol);
    const double margin = *r.doubled_length - 2.0 * kPi;
    bool ok = margin >= -band;
    std::string details = "length over [0, 4pi] = " + num(*r.doubled_length);
    if (std::abs(margin) <= band) {
        const double gc = r.great_circle_residual.value_or(0.0);
        ok = ok && gc <= kGreatCircleLimit;
        details += ", equality case, great-circle residual = " + num(gc);
    }
    if (r.hyperspheres_crossed) {
        ok = ok && *r.hyperspheres_crossed;
        details += *r.hyperspheres_crossed ? ", every sampled great hypersphere is met"
                                           : ", a sampled great hypersphere misses e";
    }
    return verdict(TheoremId::rs_doubled, status_of(ok), margin, details);
}

TheoremVerdict verify_t_length(const AnalysisReport& r) {
    const double gap = std::abs(r.indicatrix_length - r.K);
    const double limit = 2.0 * r.tol;
    return verdict(TheoremId::t_length, status_of(gap <= limit), limit - gap,
                   "|L(e) - K| = " + num(gap) + ", L(e) = " + num(r.indicatrix_length));
}

TheoremVerdict verify_theta_prime(const AnalysisReport& r) {
    if (!r.theta_prime_max_deviation) return skip(TheoremId::theta_prime, "planar frontals only");
    const double dev = *r.theta_prime_max_deviation;
    return verdict(TheoremId::theta_prime, status_of(dev <= kThetaPrimeLimit), kThetaPrimeLimit - dev,
                   "max |theta' - det(e, e')| = " + num(dev) + " over " + std::to_string(r.theta_prime_samples) +
                       " points");
}

TheoremVerdict verify_sgn_boundary(const AnalysisReport& r) {
    if (r.dimension != 2) return skip(TheoremId::sgn_boundary, "planar frontals only");
    if (!r.all_cusps) return skip(TheoremId::sgn_boundary, "a singular point is not a cusp");
    return verdict(TheoremId::sgn_boundary, status_of(r.sgn_violations == 0), -r.sgn_violations,
                   std::to_string(r.sgn_violations) + " violations in " + std::to_string(r.sgn_windows) + " windows");
}

TheoremVerdict verify_theta_integral(const AnalysisReport& r) {
    if (!r.theta_integral_min_margin) return skip(TheoremId::theta_integral, "no windows");
    const double m = *r.theta_integral_min_margin;
    return verdict(TheoremId::theta_integral, status_of(m >= -equality_band(r.tol)), m,
                   "min K_segment - arccos(e(a).e(b)) = " + num(m) + " over " +
                       std::to_string(r.theta_integral_windows) + " windows");
}

TheoremVerdict verify_cusp_bounds(const AnalysisReport& r) {
    if (!r.intersections) return skip(TheoremId::cusp_bounds, "self-intersections not computed");
    double worst = std::numeric_limits<double>::infinity();
    int applicable = 0;
    int failed = 0;
    std::string first_failure;
    for (const auto& w : r.windows) {
        if (!w.bound.applicable) continue;
        ++applicable;
        worst = std::min(worst, w.bound.margin);
        if (!w.bound.pass) {
            ++failed;
            if (first_failure.empty()) {
                first_failure = "; window [" + num(w.window.a) + ", " + num(w.window.b) + "] j = " +
                                std::to_string(w.window.interior_cusps) + " K = " + num(w.window.K_segment) +
                                " bound = " + num(w.bound.bound);
            }
        }
    }
    if (applicable == 0) return skip(TheoremId::cusp_bounds, "no window with j <= 2");
    return verdict(TheoremId::cusp_bounds, status_of(failed == 0), worst,
                   std::to_string(applicable) + " windows, " + std::to_string(failed) + " violations" + first_failure);
}

TheoremVerdict verify_gauss_bonnet(const AnalysisReport& r) {
    if (!r.gauss_bonnet) return skip(TheoremId::gauss_bonnet, "needs a simple planar curve whose singular points are cusps");
    const double band = equality_band(r.tol);
    const auto& gb = *r.gauss_bonnet;
    return verdict(TheoremId::gauss_bonnet, status_of(gb.residual <= band), band - gb.residual,
                   "residual = " + num(gb.residual) + ", N = " + std::to_string(gb.cusps) +
                       ", eta = " + std::to_string(gb.eta) + ", interior-on-left total = " + num(gb.interior_left_total));
}

std::vector<TheoremVerdict> verify_all(const AnalysisReport& r) {
    const auto [a_bound, a_eq] = verify_theorem_A(r);
    const auto [b_parity, b_simple] = verify_theorem_B(r);
    return {a_bound,
            a_eq,
            b_parity,
            b_simple,
            verify_t_length(r),
            verify_theta_prime(r),
            verify_sgn_boundary(r),
            verify_theta_integral(r),
            verify_cusp_bounds(r),
            verify_gauss_bonnet(r),
            verify_rs_doubled(r)};
}

bool any_failed(std::span<const TheoremVerdict> verdicts) {
    return std::any_of(verdicts.begin(), verdicts.end(), [](const auto& v) { return v.status == Status::fail; });
}

std::optional<CorpusKind> parse_corpus_kind(std::string_view name) {
    if (name == "n2") return CorpusKind::n2;
    if (name == "n2-monotone") return CorpusKind::n2_monotone;
    if (name == "n3") return CorpusKind::n3;
    return std::nullopt;
}

std::string_view to_string(CorpusKind kind) {
    switch (kind) {
        case CorpusKind::n2: return "n2";
        case CorpusKind::n2_monotone: return "n2-monotone";
        case CorpusKind::n3: return "n3";
    }
    return "n2";
}

GeneratorSpec corpus_item(CorpusKind kind, std::size_t i, std::uint64_t seed) {
    GeneratorSpec g;
    g.seed = mix(seed, i);
    switch (kind) {
        case CorpusKind::n2: {
            // Cycle through +1/2, -1/2, +3/2, -3/2; monotone on even blocks of four.
            static constexpr int twice[] = {1, -1, 3, -3};
            g.index = HalfInteger::from_twice(twice[i % 4]);
            g.monotone = (i / 4) % 2 == 0;
            g.amplitude = g.monotone ? 0.4 * std::abs(g.index.value()) : 0.3;
            break;
        }
        case CorpusKind::n2_monotone:
            g.index = HalfInteger::from_twice(i % 2 == 0 ? 1 : -1);
            g.monotone = true;
            g.amplitude = 0.2;
            break;
        case CorpusKind::n3:
            g.dimension = 3;
            g.co_orientable = false;
            g.planar = i % 5 == 0;
            g.index = HalfInteger::from_twice(1);
            g.monotone = true;
            g.amplitude = 0.2;
            break;
    }
    return g;
}

CorpusSummary run_corpus(CorpusKind kind, std::size_t count, std::uint64_t seed, const CorpusOptions& options) {
    if (count < 1) throw Error(ErrorKind::spec, "corpus count must be at least 1");
    CorpusSummary s;
    s.kind = kind;
    s.requested = count;
    for (const auto& [id, name] : kIds) s.tallies[id];

    AnalysisOptions ao;
    ao.tol = options.tol;
    ao.topology = options.topology;
    for (std::size_t i = 0; i < count; ++i) {
        const GeneratorSpec g = corpus_item(kind, i, seed);
        const ClosedCurve curve = generate(g);
        ao.seed = g.seed;
        AnalysisReport report = analyze(curve, ao);
        ++s.count;

        bool failed = false;
        for (const auto& v : report.verdicts) {
            TheoremTally& t = s.tallies[v.id];
            switch (v.status) {
                case Status::pass: ++t.pass; break;
                case Status::fail: ++t.fail; break;
                case Status::not_applicable: ++t.not_applicable; break;
            }
            if (v.status != Status::not_applicable) t.margins.push_back(v.margin);
            if (v.status == Status::fail) {
                failed = true;
                s.failures.push_back({i, g.seed, std::string(to_string(v.id)), v.details, {}});
            }
        }
        if (failed && options.failure_dir) {
            std::filesystem::create_directories(*options.failure_dir);
            const auto path = *options.failure_dir / ("failure-" + std::string(to_string(kind)) + "-" +
                                                      std::to_string(i) + ".json");
            std::ofstream out(path);
            if (!out) throw Error(ErrorKind::io, "cannot write " + path.string());
            out << curve_to_json(curve).dump(2) << '\n';
            for (auto& f : s.failures) {
                if (f.item == i) f.spec_path = path.string();
            }
        }
        if (options.keep_reports) s.reports.push_back(std::move(report));
        if (failed) {
            s.aborted = true;
            break;
        }
    }
    return s;
}

nlohmann::json corpus_summary_json(const CorpusSummary& s) {
    nlohmann::json doc;
    doc["corpus"] = std::string(to_string(s.kind));
    doc["requested"] = s.requested;
    doc["count"] = s.count;
    doc["aborted"] = s.aborted;
    doc["failures"] = nlohmann::json::array();
    for (const auto& f : s.failures) {
        doc["failures"].push_back({{"item", f.item},
                                   {"seed", f.seed},
                                   {"theorem", f.theorem},
                                   {"details", f.details},
                                   {"spec_path", f.spec_path}});
    }
    nlohmann::json margins = nlohmann::json::object();
    for (const auto& [id, t] : s.tallies) {
        nlohmann::json entry{{"pass", t.pass}, {"fail", t.fail}, {"not_applicable", t.not_applicable}};
        if (t.margins.empty()) {
            entry["min"] = nullptr;
            entry["median"] = nullptr;
        } else {
            std::vector<double> m = t.margins;
            std::sort(m.begin(), m.end());
            entry["min"] = m.front();
            const std::size_t h = m.size() / 2;
            entry["median"] = m.size() % 2 ? m[h] : 0.5 * (m[h - 1] + m[h]);
        }
        margins[std::string(to_string(id))] = entry;
    }
    doc["margins"] = margins;
    return doc;
}

}  // namespace frontal
