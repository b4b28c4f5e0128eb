#include "frontal/analysis.hpp"
#include "frontal/curve_spec.hpp"
#include "frontal/error.hpp"
#include "frontal/generator.hpp"
#include "frontal/report.hpp"

#include "schema_check.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

#include <fstream>

using namespace frontal;

namespace {

nlohmann::json load(const std::string& name) {
    std::ifstream in(std::string(FRONTAL_DOCS) + "/" + name);
    return nlohmann::json::parse(in);
}

}  // namespace

TEST(Report, MatchesSchema) {
    const testsupport::SchemaCheck report(load("report.schema.json"));
    const testsupport::SchemaCheck spec(load("curve-spec.schema.json"));
    GeneratorSpec g3;
    g3.dimension = 3;
    g3.seed = 1;
    std::vector<ClosedCurve> curves{testsupport::hypocycloid(1), testsupport::hypocycloid(2), testsupport::eye(1.0),
                                    make_family("ellipse", {}), generate(g3)};
    for (const auto& c : curves) {
        const nlohmann::json doc = report_to_json(analyze(c));
        const auto errs = report.errors(doc);
        EXPECT_TRUE(errs.empty()) << errs.front();
        EXPECT_TRUE(spec.errors(doc["curve"]).empty());
    }
}

TEST(Report, SchemaCatchesDamage) {
    const testsupport::SchemaCheck report(load("report.schema.json"));
    nlohmann::json doc = report_to_json(analyze(testsupport::hypocycloid(1)));
    doc.erase("verdicts");
    doc["units"] = "degrees";
    EXPECT_EQ(report.errors(doc).size(), 2u);
}

TEST(Report, Values) {
    const nlohmann::json doc = report_to_json(analyze(testsupport::hypocycloid(1)));
    EXPECT_EQ(doc["units"], "radians");
    EXPECT_EQ(doc["tool_version"], std::string(kToolVersion));
    EXPECT_EQ(doc["cusp_count"], 3);
    EXPECT_EQ(doc["rotation_index"]["text"], "1/2");
    EXPECT_EQ(doc["sigma"], 1);
    EXPECT_EQ(doc["simplicity"], "simple");
    EXPECT_NEAR(doc["total_absolute_curvature"]["value"].get<double>(), kPi, 1e-9);
    EXPECT_LE(doc["indicatrix_gap"].get<double>(), 2e-9);
    EXPECT_NEAR(doc["gauss_bonnet"]["interior_left_total"].get<double>(), -kPi, 1e-9);
    EXPECT_EQ(doc["verdicts"].size(), 11u);
}

TEST(Report, Deterministic) {
    const auto a = report_to_json(analyze(testsupport::hypocycloid(3))).dump();
    const auto b = report_to_json(analyze(testsupport::hypocycloid(3))).dump();
    EXPECT_EQ(a, b);
}

TEST(Report, AnalyzeRejectsOpenGerm) {
    try {
        analyze(make_family("model-cusp", {}));
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::precondition);
    }
}

TEST(Render, SvgStructure) {
    RenderOptions o;
    o.samples = 64;
    o.mark_cusps = true;
    o.show_indicatrix = true;
    const std::string svg = render_svg(testsupport::hypocycloid(2), o);
    EXPECT_EQ(svg.rfind("<?xml", 0), 0u);
    EXPECT_NE(svg.find("</svg>"), std::string::npos);
    std::size_t circles = 0, pos = 0;
    while ((pos = svg.find("fill=\"red\"", pos)) != std::string::npos) {
        ++circles;
        ++pos;
    }
    EXPECT_EQ(circles, 5u);
    EXPECT_NE(svg.find("stroke-dasharray"), std::string::npos);
    EXPECT_EQ(svg, render_svg(testsupport::hypocycloid(2), o));
}

TEST(Render, Errors) {
    RenderOptions o;
    o.samples = 8;
    EXPECT_THROW(render_svg(testsupport::eye(1.0), o), Error);
    EXPECT_THROW(render_svg(testsupport::hypocycloid(1, 4)), Error);
    EXPECT_NO_THROW(render_svg(testsupport::hypocycloid(1, 3)));
}
