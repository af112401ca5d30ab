#include "symstress/catalog.hpp"
#include "symstress/errors.hpp"
#include "symstress/io.hpp"
#include "symstress/render.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace symstress;

namespace {

constexpr double pi = std::numbers::pi;

int count(const std::string& text, const std::string& needle) {
    int n = 0;
    for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + needle.size())) ++n;
    return n;
}

}  // namespace

TEST_CASE("framework documents round-trip byte for byte") {
    for (const auto& name : catalog_names()) {
        const auto entry = generate(name, name == "quadgrid" ? CatalogParams{{"n", 4}} : CatalogParams{});
        CAPTURE(name);
        const std::optional<GroupChoice> group = GroupChoice{false, entry.group};
        const std::string text = framework_to_json(entry.framework, group);
        const auto doc = parse_framework(text);
        CHECK(doc.framework.positions() == entry.framework.positions());
        CHECK(doc.framework.graph().edges() == entry.framework.graph().edges());
        CHECK(doc.framework.pinned_count() == entry.framework.pinned_count());
        REQUIRE(doc.group.has_value());
        CHECK(doc.group->group.name() == entry.group.name());
        CHECK(framework_to_json(doc.framework, doc.group) == text);
    }
}

TEST_CASE("group field forms") {
    const std::string base = R"({"vertices":[{"id":0,"x":1,"y":0},{"id":1,"x":-1,"y":0}],"edges":[[0,1]])";
    CHECK(!parse_framework(base + "}").group.has_value());
    CHECK(parse_framework(base + R"(,"group":"auto"})").group->automatic);
    const auto cs = parse_framework(base + R"(,"group":{"family":"Cs","mirror_angle_deg":90}})");
    CHECK(cs.group->group.name() == "Cs");
    CHECK(mirror_angle_degrees(cs.group->group) == 90.0);
    const auto c2 = parse_framework(base + R"(,"group":{"family":"Cn","n":2,"center":[0.5,0]}})");
    CHECK(c2.group->group.center().x == 0.5);
    CHECK_THROWS_AS(parse_framework(base + R"(,"group":"C2"})"), ParseError);
    CHECK_THROWS_AS(parse_framework(base + R"(,"group":{"family":"D4"}})"), ParseError);
    CHECK_THROWS_AS(parse_framework(base + R"(,"group":{"family":"Cn","n":0}})"), ParseError);
}

TEST_CASE("malformed documents") {
    CHECK_THROWS_AS(parse_framework("{"), ParseError);
    CHECK_THROWS_AS(parse_framework("[]"), ParseError);
    CHECK_THROWS_AS(parse_framework(R"({"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_framework(R"({"vertices":[{"id":1,"x":0,"y":0}],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_framework(R"({"vertices":[{"id":0,"x":"a","y":0}],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_framework(R"({"vertices":[{"id":0,"x":0,"y":0,"pinned":1}],"edges":[]})"), ParseError);
    CHECK_THROWS_AS(parse_framework(R"({"vertices":[{"id":0,"x":0,"y":0}],"edges":[[0]]})"), ParseError);
    // Well-formed JSON that violates framework invariants.
    CHECK_THROWS_AS(parse_framework(R"({"vertices":[{"id":0,"x":0,"y":0},{"id":1,"x":0,"y":0}],"edges":[[0,1]]})"),
                    InvalidFramework);
    CHECK_THROWS_AS(parse_framework(R"({"vertices":[{"id":0,"x":0,"y":0},{"id":1,"x":1,"y":0}],"edges":[[0,1],[1,0]]})"),
                    InvalidFramework);
    CHECK_THROWS_AS(read_framework("/nonexistent/file.json"), ParseError);
}

TEST_CASE("group flags") {
    CHECK(parse_group_flag("auto").automatic);
    CHECK(parse_group_flag("C1").group.name() == "C1");
    CHECK(mirror_angle_degrees(parse_group_flag("Cs").group) == 0.0);
    CHECK(mirror_angle_degrees(parse_group_flag("Cs:vertical").group) == 90.0);
    CHECK(mirror_angle_degrees(parse_group_flag("Cs:horizontal").group) == 0.0);
    CHECK(mirror_angle_degrees(parse_group_flag("Cs:30").group) == 30.0);
    CHECK(parse_group_flag("Cn:6").group.name() == "C6");
    CHECK(parse_group_flag("Cnv:4").group.name() == "C4v");
    CHECK(mirror_angle_degrees(parse_group_flag("Cnv:3:10").group) == 10.0);
    for (const char* bad : {"", "D2", "Cn", "Cn:0", "Cn:x", "Cnv:4:abc", "Cs:1:2", "C1:3"})
        CHECK_THROWS_AS(parse_group_flag(bad), ParseError);
}

TEST_CASE("number formatting") {
    CHECK(format_number(0.0) == "0");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(1.5) == "1.5");
    CHECK(format_number(0.1) == "0.1");
    CHECK(format_number(2.0) == "2");
    CHECK(format_fixed(1.23456, 2) == "1.23");
    CHECK(format_fixed(1.0, 2) == "1");
    CHECK(format_fixed(-0.001, 2) == "0");
    CHECK(format_fixed(12.5, 0) == "12");
}

TEST_CASE("analysis reports") {
    const auto e = generate("fig9a");
    const auto r = analyze(e.framework, e.group);
    const std::string j = analysis_to_json(r, "fig9a.json");
    CHECK(j == analysis_to_json(r, "fig9a.json"));
    CHECK(j.find("\"schema_version\": 1") != std::string::npos);
    CHECK(j.find("\"decomposition_text\": \"-5A1 + 2A2 - B1 - B2 - 2E\"") != std::string::npos);
    CHECK(j.find("\"cross_check\": \"agree\"") != std::string::npos);
    CHECK(j.back() == '\n');
    const std::string t = analysis_to_text(r, "fig9a.json");
    CHECK(t.find("Gamma(m) - Gamma(s) = -5A1 + 2A2 - B1 - B2 - 2E") != std::string::npos);
    CHECK(t.find("closed form: agree") != std::string::npos);

    const auto v = verify(e.framework, e.group);
    const std::string vj = verification_to_json(v, r, "fig9a.json");
    CHECK(vj == verification_to_json(v, r, "fig9a.json"));
    CHECK(vj.find("\"passed\": true") != std::string::npos);
    CHECK(verification_to_text(v).find("intertwining") != std::string::npos);
}

TEST_CASE("svg rendering") {
    RenderSpec spec;
    SUBCASE("unshifted bars on fig2b") {
        const auto e = generate("fig2b");
        const std::string svg = render_svg(e.framework, e.group, spec);
        CHECK(svg == render_svg(e.framework, e.group, spec));
        CHECK(svg.find("<svg ") != std::string::npos);
        CHECK(svg.substr(svg.size() - 7) == "</svg>\n");
        CHECK(count(svg, "class=\"bar unshifted\"") == 4);
        CHECK(count(svg, "class=\"mirror\"") == 1);
        CHECK(count(svg, "data-edge=") == e.framework.edge_count());
        CHECK(count(svg, "class=\"joint\"") == e.framework.vertex_count());
        spec.unshifted = false;
        spec.mirrors = false;
        const std::string plain = render_svg(e.framework, e.group, spec);
        CHECK(count(plain, "unshifted") == 0);
        CHECK(count(plain, "class=\"mirror\"") == 0);
    }
    SUBCASE("no group, no overlays") {
        const auto e = generate("fig3");
        const std::string svg = render_svg(e.framework, std::nullopt, spec);
        CHECK(count(svg, "class=\"mirror\"") == 0);
        CHECK(count(svg, "class=\"center\"") == 0);
        CHECK(count(svg, "unshifted") == 0);
    }
    SUBCASE("C4v mirrors and pins") {
        const auto e = generate("quadgrid", {{"n", 3}});
        const std::string svg = render_svg(e.framework, e.group, spec);
        CHECK(count(svg, "class=\"mirror\"") == 4);
        CHECK(count(svg, "class=\"joint pinned\"") == 12);
    }
    SUBCASE("stress overlay") {
        const auto e = generate("fig10");
        const auto w = numeric_analysis(e.framework).self_stresses.col(0);
        const std::string svg = render_svg(e.framework, e.group, spec, Eigen::VectorXd(w));
        CHECK(count(svg, " tension\"") + count(svg, " compression\"") + count(svg, " unstressed\"") ==
              e.framework.edge_count());
        CHECK(svg == render_svg(e.framework, e.group, spec, Eigen::VectorXd(-w)));
        CHECK_THROWS_AS(render_svg(e.framework, e.group, spec, Eigen::VectorXd::Ones(2)), DimensionMismatch);
    }
    SUBCASE("invalid specs") {
        spec.width = 0;
        CHECK_THROWS_AS(spec.validate(), DomainError);
        spec.width = 100;
        spec.margin = 50;
        CHECK_THROWS_AS(spec.validate(), DomainError);
    }
}

TEST_CASE("stress normalisation") {
    Eigen::VectorXd w(3);
    w << 0.5, -2.0, 1.0;
    const Eigen::VectorXd n = normalize_stress(w);
    CHECK(n(1) == doctest::Approx(1.0));
    CHECK(n(0) == doctest::Approx(-0.25));
    Eigen::VectorXd tie(2);
    tie << -1.0, 1.0;
    CHECK(normalize_stress(tie)(0) == doctest::Approx(1.0));
    CHECK(normalize_stress(Eigen::VectorXd::Zero(2)).cwiseAbs().maxCoeff() == 0.0);
    (void)pi;
}
