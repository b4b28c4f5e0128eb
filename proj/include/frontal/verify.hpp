#pragma once

#include "frontal/analysis.hpp"
#include "frontal/generator.hpp"

#include <json.hpp>

#include <cstdint>
#include <filesystem>
#include <map>
#include <span>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace frontal {

std::string_view to_string(TheoremId id);
std::string_view to_string(Status s);
std::optional<TheoremId> parse_theorem_id(std::string_view name);

// Each check is a pure function of the report.
std::pair<TheoremVerdict, TheoremVerdict> verify_theorem_A(const AnalysisReport& r);
std::pair<TheoremVerdict, TheoremVerdict> verify_theorem_B(const AnalysisReport& r);
TheoremVerdict verify_rs_doubled(const AnalysisReport& r);
TheoremVerdict verify_t_length(const AnalysisReport& r);
TheoremVerdict verify_theta_prime(const AnalysisReport& r);
TheoremVerdict verify_sgn_boundary(const AnalysisReport& r);
TheoremVerdict verify_theta_integral(const AnalysisReport& r);
TheoremVerdict verify_cusp_bounds(const AnalysisReport& r);
TheoremVerdict verify_gauss_bonnet(const AnalysisReport& r);

/// All verdicts in TheoremId order.
std::vector<TheoremVerdict> verify_all(const AnalysisReport& r);

bool any_failed(std::span<const TheoremVerdict> verdicts);

// ---------------------------------------------------------------------------
// Corpora

enum class CorpusKind {
    n2,           // planar, index in {+-1/2, +-3/2}, alternating monotone / non-monotone angle
    n2_monotone,  // planar, index +-1/2, monotone angle
    n3,           // R^3, non-co-orientable; every fifth curve planar-embedded and monotone
};

std::optional<CorpusKind> parse_corpus_kind(std::string_view name);
std::string_view to_string(CorpusKind kind);

/// Generator spec for item `i` of a corpus.
GeneratorSpec corpus_item(CorpusKind kind, std::size_t i, std::uint64_t seed);

struct CorpusFailure {
    std::size_t item = 0;
    std::uint64_t seed = 0;
    std::string theorem;
    std::string details;
    std::string spec_path;  // empty when nothing was persisted
};

struct TheoremTally {
    int pass = 0;
    int fail = 0;
    int not_applicable = 0;
    std::vector<double> margins;  // of evaluated (pass or fail) verdicts
};

struct CorpusSummary {
    CorpusKind kind = CorpusKind::n2;
    std::size_t requested = 0;
    std::size_t count = 0;  // curves actually analyzed
    bool aborted = false;
    std::vector<CorpusFailure> failures;
    std::map<TheoremId, TheoremTally> tallies;
    std::vector<AnalysisReport> reports;  // kept when requested
};

struct CorpusOptions {
    double tol = kDefaultTolerance;
    std::optional<std::filesystem::path> failure_dir;  // where offending specs are written
    bool keep_reports = false;
    bool topology = true;
};

/// Generates, analyzes and verifies `count` curves; stops at the first failing curve.
CorpusSummary run_corpus(CorpusKind kind, std::size_t count, std::uint64_t seed, const CorpusOptions& options = {});

/// {count, failures: [...], margins: {id: {min, median}}, ...}
nlohmann::json corpus_summary_json(const CorpusSummary& s);

}  // namespace frontal
