#pragma once

#include "frontal/analysis.hpp"

#include <json.hpp>

#include <string>

namespace frontal {

/// Report document described in docs/report-schema.md and docs/report.schema.json.
nlohmann::json report_to_json(const AnalysisReport& report);

struct RenderOptions {
    int samples = 2000;
    bool mark_cusps = false;
    bool show_indicatrix = false;
};

/// Standalone SVG of the curve (planar, or the xy-projection of a curve in R^3),
/// optionally with the tangent indicatrix beside it. Dimension > 3 is unsupported.
std::string render_svg(const ClosedCurve& curve, const RenderOptions& options = {});

}  // namespace frontal
