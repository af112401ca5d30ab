#include "generators.hpp"
#include "oracles.hpp"

#include "symstress/catalog.hpp"
#include "symstress/errors.hpp"
#include "symstress/reptheory.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace symstress;

namespace {

constexpr double pi = std::numbers::pi;

std::vector<PointGroup> groups_up_to(int max_n) {
    std::vector<PointGroup> out;
    for (int n = 1; n <= max_n; ++n) {
        out.emplace_back(Family::Cn, n);
        out.emplace_back(Family::Cnv, n);
    }
    return out;
}

void check_row(const CharacterTable& t, const std::string& label, const std::vector<double>& values) {
    const int i = t.find(label);
    REQUIRE_MESSAGE(i >= 0, label);
    const auto& ch = t.irreps[static_cast<std::size_t>(i)].character;
    REQUIRE(ch.size() == values.size());
    for (std::size_t c = 0; c < values.size(); ++c) {
        CHECK(ch[c].real() == doctest::Approx(values[c]));
        CHECK(std::abs(ch[c].imag()) < 1e-12);
    }
}

Character real_character(std::vector<double> v) {
    Character c;
    for (double x : v) c.values.emplace_back(x);
    return c;
}

}  // namespace

TEST_CASE("C2v table as published") {
    const auto t = character_table(PointGroup(Family::Cnv, 2));
    CHECK(t.class_labels == std::vector<std::string>{"E", "C2", "σh", "σv"});
    check_row(t, "A1", {1, 1, 1, 1});
    check_row(t, "A2", {1, 1, -1, -1});
    check_row(t, "B1", {1, -1, 1, -1});
    check_row(t, "B2", {1, -1, -1, 1});
}

TEST_CASE("C3v and C4v tables as published") {
    const auto t3 = character_table(PointGroup(Family::Cnv, 3));
    CHECK(t3.class_sizes == std::vector<int>{1, 2, 3});
    check_row(t3, "A1", {1, 1, 1});
    check_row(t3, "A2", {1, 1, -1});
    check_row(t3, "E", {2, -1, 0});

    const auto t4 = character_table(PointGroup(Family::Cnv, 4));
    CHECK(t4.class_labels == std::vector<std::string>{"E", "2C4", "C2", "2σv", "2σd"});
    check_row(t4, "A1", {1, 1, 1, 1, 1});
    check_row(t4, "A2", {1, 1, 1, -1, -1});
    check_row(t4, "B1", {1, -1, 1, 1, -1});
    check_row(t4, "B2", {1, -1, 1, -1, 1});
    check_row(t4, "E", {2, 0, -2, 0, 0});
}

TEST_CASE("Cs, C2 and C3 tables") {
    const auto cs = character_table(PointGroup(Family::Cnv, 1));
    check_row(cs, "A'", {1, 1});
    check_row(cs, "A''", {1, -1});
    const auto c2 = character_table(PointGroup(Family::Cn, 2));
    check_row(c2, "A", {1, 1});
    check_row(c2, "B", {1, -1});
    const auto c3 = character_table(PointGroup(Family::Cn, 3));
    REQUIRE(c3.irreps.size() == 3);
    const Complex eps = std::polar(1.0, 2 * pi / 3);
    CHECK(std::abs(c3.irreps[1].character[1] - eps) < 1e-12);
    CHECK(std::abs(c3.irreps[2].character[1] - std::conj(eps)) < 1e-12);
    CHECK(c3.irreps[1].conjugate == 2);
    CHECK(c3.irreps[0].conjugate == 0);
    CHECK(!c3.irreps[1].character.is_real());
}

TEST_CASE("C6v and C5v labels") {
    const auto t6 = character_table(PointGroup(Family::Cnv, 6));
    std::vector<std::string> labels;
    for (const auto& r : t6.irreps) labels.push_back(r.label);
    CHECK(labels == std::vector<std::string>{"A1", "A2", "B1", "B2", "E1", "E2"});
    const auto t5 = character_table(PointGroup(Family::Cnv, 5));
    CHECK(t5.find("E2") >= 0);
    CHECK(t5.find("B1") < 0);
}

TEST_CASE("property: tables agree with explicit representation matrices") {
    for (const auto& g : groups_up_to(12)) {
        CAPTURE(g.name());
        const auto t = character_table(g);
        const auto reps = oracle::irreps(g.family() == Family::Cnv, g.n());
        REQUIRE(t.irreps.size() == reps.size());
        for (std::size_t i = 0; i < reps.size(); ++i) {
            CHECK(t.irreps[i].label == reps[i].label);
            CHECK(t.irreps[i].dimension == reps[i].dimension);
            for (int e = 0; e < g.order(); ++e) {
                const Complex lib = t.irreps[i].character[static_cast<std::size_t>(g.class_of(e))];
                CHECK(std::abs(lib - reps[i].trace[static_cast<std::size_t>(e)]) < 1e-9);
            }
        }
    }
}

TEST_CASE("property: orthogonality and dimension sums") {
    for (const auto& g : groups_up_to(12)) {
        CAPTURE(g.name());
        const auto t = character_table(g);
        CHECK(t.order() == g.order());
        int dim2 = 0;
        for (const auto& r : t.irreps) dim2 += r.dimension * r.dimension;
        CHECK(dim2 == g.order());
        CHECK(t.irreps.size() == t.class_labels.size());
        for (std::size_t i = 0; i < t.irreps.size(); ++i)
            for (std::size_t j = 0; j < t.irreps.size(); ++j) {
                Complex s = 0;
                for (std::size_t c = 0; c < t.class_sizes.size(); ++c)
                    s += static_cast<double>(t.class_sizes[c]) * t.irreps[i].character[c] * std::conj(t.irreps[j].character[c]);
                s /= static_cast<double>(g.order());
                CHECK(std::abs(s - Complex(i == j ? 1.0 : 0.0)) < 1e-9);
            }
    }
}

TEST_CASE("reducing an irreducible character gives its indicator") {
    for (const auto& g : groups_up_to(8)) {
        const auto t = character_table(g);
        for (std::size_t i = 0; i < t.irreps.size(); ++i) {
            const auto d = reduce(t.irreps[i].character, t);
            for (std::size_t j = 0; j < t.irreps.size(); ++j) CHECK(d.coefficients[j] == (i == j ? 1 : 0));
        }
    }
}

TEST_CASE("reducible characters from published censuses") {
    SUBCASE("fig9a under C4v") {
        const PointGroup g(Family::Cnv, 4);
        const auto c = make_census(g, 33, 72, 1, 0, {8, 8}, {}, false);
        const auto ch = reducible_character(c, g);
        const std::vector<double> expected{-9, -1, -1, -7, -7};
        for (std::size_t i = 0; i < expected.size(); ++i) CHECK(ch[i].real() == doctest::Approx(expected[i]));
    }
    SUBCASE("fig4a under Cs") {
        const PointGroup g(Family::Cnv, 1, pi / 2);
        const auto c = make_census(g, 13, 24, 0, 0, {0}, {3}, false);
        const auto ch = reducible_character(c, g);
        CHECK(ch[0].real() == doctest::Approx(-1));
        CHECK(ch[1].real() == doctest::Approx(1));
        CHECK(reduce(ch, character_table(g)).to_string() == "-A''");
    }
    SUBCASE("pinned gridshell census under C2v") {
        const auto entry = gridshell_census();
        const auto ch = reducible_character(entry.census, entry.group);
        const std::vector<double> expected{4, -2, -4, -18};
        for (std::size_t i = 0; i < expected.size(); ++i) CHECK(ch[i].real() == doctest::Approx(expected[i]));
    }
}

TEST_CASE("property: reducible character matches brute force on the catalog") {
    for (const auto& name : catalog_names()) {
        const auto entry = generate(name, name == "quadgrid" ? CatalogParams{{"n", 5}} : CatalogParams{});
        CAPTURE(name);
        const auto& g = entry.group;
        const auto ch = reducible_character(census(entry.framework, g), g);
        const auto ops = oracle::elements(g.family() == Family::Cnv, g.n(), g.mirror_ref_angle());
        for (int e = 0; e < g.order(); ++e) {
            const double ref = oracle::character_at(entry.framework, ops[static_cast<std::size_t>(e)]);
            CHECK(ch[static_cast<std::size_t>(g.class_of(e))].real() == doctest::Approx(ref).epsilon(1e-12));
        }
    }
}

TEST_CASE("non-integral multiplicities are rejected") {
    const auto cs = character_table(PointGroup(Family::Cnv, 1));
    CHECK_THROWS_AS(reduce(real_character({1, 0}), cs), NonIntegerMultiplicity);
    const auto c2v = character_table(PointGroup(Family::Cnv, 2));
    CHECK_THROWS_AS(reduce(real_character({2, 0, 0, 0}), c2v), NonIntegerMultiplicity);
    CHECK_THROWS_AS(reduce(real_character({1, 1}), c2v), DimensionMismatch);
}

TEST_CASE("decomposition formatting and access") {
    const PointGroup g(Family::Cnv, 4);
    const auto t = character_table(g);
    auto d = empty_decomposition(t);
    CHECK(d.to_string() == "0");
    d.coefficients = {-5, 2, -1, -1, -2};
    CHECK(d.to_string() == "-5A1 + 2A2 - B1 - B2 - 2E");
    CHECK(d["E"] == -2);
    CHECK(d["X"] == 0);
    CHECK(d.weighted_sum() == -9);
}

TEST_CASE("property: reconstruction and weighted sums on random censuses") {
    std::mt19937 rng(5);
    for (const auto& g : groups_up_to(8)) {
        const auto t = character_table(g);
        for (int trial = 0; trial < 30; ++trial) {
            const auto c = gen::random_census(g, rng, trial % 3 == 0);
            const auto ch = reducible_character(c, g);
            const auto d = reduce(ch, t);
            CHECK(d.weighted_sum() == c.freedom_number());
            const auto back = reconstruct(d, t);
            for (std::size_t i = 0; i < ch.size(); ++i) CHECK(std::abs(back[i] - ch[i]) < 1e-9);
            // Real characters give equal multiplicities on conjugate pairs.
            for (std::size_t i = 0; i < t.irreps.size(); ++i)
                CHECK(d.coefficients[i] == d.coefficients[static_cast<std::size_t>(t.irreps[i].conjugate)]);
        }
    }
}

TEST_CASE("trig_sum") {
    for (int n = 3; n <= 24; ++n)
        for (int t = 1; t < n; ++t) {
            const double expected = (t == 1 || t == n - 1) ? n / 2.0 : 0.0;
            CHECK(std::abs(trig_sum(n, t) - Complex(expected)) < 1e-9);
        }
    CHECK_THROWS_AS(trig_sum(2, 1), DomainError);
    CHECK_THROWS_AS(trig_sum(5, 0), DomainError);
    CHECK_THROWS_AS(trig_sum(5, 5), DomainError);
}
