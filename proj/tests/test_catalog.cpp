#include "oracles.hpp"

#include "symstress/catalog.hpp"
#include "symstress/counting.hpp"
#include "symstress/errors.hpp"
#include "symstress/numeric.hpp"

#include <doctest.h>

#include <numbers>

using namespace symstress;

namespace {

constexpr double pi = std::numbers::pi;

CatalogParams small(const std::string& name) {
    return name == "quadgrid" ? CatalogParams{{"n", 6}} : CatalogParams{};
}

int census_value(const SymmetryCensus& c, const PointGroup& g, const std::string& key) {
    if (key == "v") return c.v;
    if (key == "e") return c.e;
    if (key == "k") return c.freedom_number();
    if (key == "v_c") return c.v_c;
    if (key == "e_2") return c.e_2;
    const std::string prefix = "e_sigma:";
    REQUIRE(key.rfind(prefix, 0) == 0);
    const auto label = key.substr(prefix.size());
    const auto mirrors = g.mirror_classes();
    for (std::size_t i = 0; i < mirrors.size(); ++i)
        if (g.classes()[static_cast<std::size_t>(mirrors[i])].label == label) return c.e_sigma[i];
    FAIL("no mirror class " << label);
    return -1;
}

}  // namespace

TEST_CASE("catalog names") {
    const auto names = catalog_names();
    CHECK(names.size() == 19);
    for (const auto& n : names) CHECK(generate(n, small(n)).name == n);
}

TEST_CASE("every recorded expectation holds") {
    for (const auto& name : catalog_names()) {
        const auto entry = generate(name, small(name));
        CAPTURE(name);
        const auto c = census(entry.framework, entry.group);
        const auto num = numeric_analysis(entry.framework);
        for (const auto& ex : entry.expectations) {
            CAPTURE(ex.quantity);
            const auto& q = ex.quantity;
            if (q == "s") CHECK(num.s == ex.value);
            else if (q == "m") CHECK(num.m == ex.value);
            else if (q.rfind("s:", 0) == 0)
                CHECK(classify_by_irrep(entry.framework, entry.group, num.self_stresses, Space::edges)[q.substr(2)] == ex.value);
            else if (q.rfind("m:", 0) == 0)
                CHECK(classify_by_irrep(entry.framework, entry.group, num.mechanisms, Space::velocities)[q.substr(2)] == ex.value);
            else if (name != "quadgrid" || (q != "v" && q != "e" && q != "k"))
                CHECK(census_value(c, entry.group, q) == ex.value);
        }
        for (const auto& dec : entry.decompositions) {
            const auto r = analyze(entry.framework, dec.group);
            for (const auto& label : r.decomposition.labels) {
                int expected = 0;
                for (const auto& [l, v] : dec.terms)
                    if (l == label) expected = v;
                CHECK(r.decomposition[label] == expected);
            }
            // Independent element-sum reduction.
            const auto ref = oracle::decomposition(entry.framework, dec.group.family() == Family::Cnv, dec.group.n(),
                                                   dec.group.mirror_ref_angle());
            for (const auto& [label, value] : ref) CHECK(r.decomposition[label] == doctest::Approx(value));
        }
    }
}

TEST_CASE("published decompositions") {
    struct Case {
        const char* name;
        PointGroup group;
        const char* text;
    };
    const PointGroup cs(Family::Cnv, 1, pi / 2), c2v(Family::Cnv, 2), c4v(Family::Cnv, 4);
    const std::vector<Case> cases{
        {"fig4a", cs, "-A''"},
        {"fig4b", cs, "-2A' + A''"},
        {"fig4c", cs, "-A' + 2A''"},
        {"fig6a", c2v, "-2A1 + A2 - B1"},
        {"fig6b", c2v, "-3A1 + A2 - B1 - B2"},
        {"fig8a", c4v, "-2A1 + A2 - B1 + B2 - E"},
        {"fig8b", c4v, "-4A1 + A2 - B1 - B2 - 3E"},
        {"fig9a", cs, "-8A' - A''"},
        {"fig9a", c2v, "-6A1 + A2 - 2B1 - 2B2"},
    };
    for (const auto& c : cases) {
        CAPTURE(c.name);
        CHECK(analyze(generate(c.name).framework, c.group).decomposition.to_string() == c.text);
    }
    const auto grid = gridshell_census();
    CHECK(grid.census.freedom_number() == 4);
    CHECK(grid.census.v_c == 1);
    CHECK(grid.census.e_sigma == std::vector<int>{4, 18});
    CHECK(grid.group.classes()[2].label == "σh");
    CHECK(analyze_census(grid.group, grid.census).decomposition.to_string() == "-5A1 + 6A2 + 5B1 - 2B2");
    CHECK(grid.decomposition.provenance == Provenance::published);
}

TEST_CASE("unknown names and parameters") {
    CHECK_THROWS_AS(generate("fig99"), UnknownEntry);
    CHECK_THROWS_AS(generate("fig2a", {{"delta", 1}}), UnknownEntry);
    CHECK_THROWS_AS(generate("fig10", {{"stretch", 1}}), UnknownEntry);
    CHECK_THROWS_AS(generate("quadgrid", {{"n", 1}}), DomainError);
    CHECK_THROWS_AS(generate("quadgrid", {{"n", 2.5}}), DomainError);
}

TEST_CASE("affine maps") {
    const auto fw = generate("fig3").framework;
    const auto same = affine_map(fw, Eigen::Matrix2d::Identity());
    CHECK(same.positions() == fw.positions());
    const auto moved = affine_map(fw, Eigen::Matrix2d::Identity(), Eigen::Vector2d(1, -2));
    CHECK(moved.position(0).x == doctest::Approx(fw.position(0).x + 1));
    CHECK(moved.position(0).y == doctest::Approx(fw.position(0).y - 2));
    Eigen::Matrix2d singular;
    singular << 1, 2, 2, 4;
    CHECK_THROWS_AS(affine_map(fw, singular), SingularMap);
    const auto pinned = generate("quadgrid", {{"n", 3}}).framework;
    CHECK(affine_map(pinned, 2 * Eigen::Matrix2d::Identity()).pinned_count() == pinned.pinned_count());
}

TEST_CASE("stretched spider web keeps only C2v") {
    const auto e = generate("fig9b");
    CHECK(detect_groups(e.framework).front().name() == "C2v");
    CHECK(numeric_analysis(e.framework).s == 11);
    const auto wider = generate("fig9b", {{"stretch", 2.0}});
    CHECK(wider.framework.scale() > e.framework.scale());
}

TEST_CASE("special position parameter") {
    CHECK(numeric_analysis(generate("fig10").framework).s == 1);
    CHECK(numeric_analysis(generate("fig10", {{"delta", 0.05}}).framework).s == 0);
    CHECK(numeric_analysis(generate("fig10", {{"delta", -0.2}}).framework).s == 0);
}

TEST_CASE("quad grid scales with n") {
    for (int n : {2, 3, 5, 8}) {
        const auto e = generate("quadgrid", {{"n", static_cast<double>(n)}});
        CHECK(e.framework.internal_count() == n * n);
        CHECK(e.framework.edge_count() == 2 * n * (n + 1));
        const auto ref = oracle::counts(e.framework);
        CHECK(ref.s == 2 * n);
        CHECK(ref.m == 0);
    }
}
