// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include "generators.hpp"

#include "symstress/catalog.hpp"
#include "symstress/counting.hpp"
#include "symstress/errors.hpp"
#include "symstress/numeric.hpp"
#include "symstress/reptheory.hpp"

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numbers>
#include <random>
#include <sstream>
#include <string>
#include <vector>

using namespace symstress;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

/// Collects failure reasons for one criterion.
struct Outcome {
    std::vector<std::string> problems;
    std::string note;

    void require(bool ok, const std::string& what) {
        if (!ok) problems.push_back(what);
    }
};

int run(int number, const std::string& title, const std::function<void(Outcome&)>& body) {
    Outcome out;
    const auto start = Clock::now();
    try {
        body(out);
    } catch (const std::exception& e) {
        out.problems.push_back(std::string("exception: ") + e.what());
    }
    const double t = seconds_since(start);
    std::ostringstream line;
    line << (out.problems.empty() ? "PASS" : "FAIL") << "  [" << number << "] " << title << " (" << t << " s)";
    if (!out.note.empty()) line << "  " << out.note;
    std::cout << line.str() << '\n';
    for (const auto& p : out.problems) std::cout << "        - " << p << '\n';
    return out.problems.empty() ? 0 : 1;
}

const PointGroup cs_vertical(Family::Cnv, 1, std::numbers::pi / 2);
const PointGroup c2v(Family::Cnv, 2);
const PointGroup c4v(Family::Cnv, 4);

void published_decompositions(Outcome& out) {
    struct Case {
        std::string name;
        PointGroup group;
        std::string text;
    };
    const std::vector<Case> cases{
        {"fig4a", cs_vertical, "-A''"},
        {"fig4b", cs_vertical, "-2A' + A''"},
        {"fig4c", cs_vertical, "-A' + 2A''"},
        {"fig6a", c2v, "-2A1 + A2 - B1"},
        {"fig6b", c2v, "-3A1 + A2 - B1 - B2"},
        {"fig8a", c4v, "-2A1 + A2 - B1 + B2 - E"},
        {"fig8b", c4v, "-4A1 + A2 - B1 - B2 - 3E"},
        {"fig9a", cs_vertical, "-8A' - A''"},
        {"fig9a", c2v, "-6A1 + A2 - 2B1 - 2B2"},
    };
    for (const auto& c : cases) {
        const auto start = Clock::now();
        const auto report = analyze(generate(c.name).framework, c.group);
        const double t = seconds_since(start);
        const std::string got = report.decomposition.to_string();
        out.require(got == c.text, c.name + " under " + c.group.name() + ": " + got + ", expected " + c.text);
        out.require(report.cross_check == CrossCheck::agree, c.name + ": closed form does not agree");
        out.require(t < 1.0, c.name + " took " + std::to_string(t) + " s");
    }
    const auto grid = gridshell_census();
    const std::string got = analyze_census(grid.group, grid.census).decomposition.to_string();
    out.require(got == "-5A1 + 6A2 + 5B1 - 2B2", "pinned gridshell: " + got);
}

void spider_web(Outcome& out) {
    const auto report = analyze(generate("fig9a").framework, c4v);
    out.require(report.cross_check == CrossCheck::agree, "closed form does not agree with the reduction");
    const std::string got = report.decomposition.to_string();
    out.require(got == "-5A1 + 2A2 - B1 - B2 - 2E", "decomposition " + got);
    out.require(report.detected_s == 11, "detected s = " + std::to_string(report.detected_s));
    out.note = got + ", detected s = " + std::to_string(report.detected_s);
}

void census_sweep(Outcome& out) {
    std::vector<std::pair<PointGroup, bool>> cases{{cs_vertical, false}, {cs_vertical, true},
                                                   {PointGroup(Family::Cn, 2), false},
                                                   {PointGroup(Family::Cn, 2), true}};
    for (int n = 3; n <= 8; ++n) cases.emplace_back(PointGroup(Family::Cn, n), false);
    cases.emplace_back(c2v, false);
    cases.emplace_back(c2v, true);
    cases.emplace_back(PointGroup(Family::Cnv, 3), false);
    cases.emplace_back(c4v, false);

    std::mt19937 rng(20261016);
    const auto start = Clock::now();
    int checked = 0;
    for (const auto& [g, pinned] : cases) {
        const auto table = character_table(g);
        int mismatches = 0;
        for (int trial = 0; trial < 1000; ++trial) {
            const auto c = gen::random_census(g, rng, pinned);
            const int k = c.freedom_number();
            const auto cf = closed_form(g, k, c);
            const auto general = reduce(reducible_character(c, g), table);
            if (!(cf == general) || cf.weighted_sum() != k) ++mismatches;
            ++checked;
        }
        out.require(mismatches == 0,
                    g.name() + (pinned ? " pinned" : "") + ": " + std::to_string(mismatches) + " mismatches");
    }
    const double t = seconds_since(start);
    out.require(t < 10.0, "sweep took " + std::to_string(t) + " s");
    out.note = std::to_string(checked) + " censuses";
}

void trig_sums(Outcome& out) {
    for (int n = 3; n <= 24; ++n)
        for (int t = 1; t < n; ++t) {
            const double expected = (t == 1 || t == n - 1) ? n / 2.0 : 0.0;
            const Complex got = trig_sum(n, t);
            out.require(std::abs(got - Complex(expected)) < 1e-9,
                        "n=" + std::to_string(n) + " t=" + std::to_string(t));
        }
}

void verify_catalog(Outcome& out) {
    for (const auto& name : catalog_names()) {
        const auto entry = generate(name);
        const auto start = Clock::now();
        const auto v = verify(entry.framework, entry.group);
        const double t = seconds_since(start);
        out.require(v.passed(), name + ": verification checks failed");
        out.require(v.intertwining < 1e-9, name + ": intertwining residual " + std::to_string(v.intertwining));
        out.require(v.identity < 1e-9, name + ": projector residual " + std::to_string(v.identity));
        out.require(v.m - v.s == v.k, name + ": m - s != k");
        for (const auto& irrep : v.irreps) {
            out.require(irrep.m - irrep.s == irrep.dimension * irrep.gamma,
                        name + ": m_i - s_i != d_i gamma_i for " + irrep.label);
            out.require(irrep.s >= irrep.detected_s, name + ": fewer self-stresses than detected in " + irrep.label);
        }
        out.require(t < 5.0, name + " took " + std::to_string(t) + " s");
    }
}

void special_positions(Outcome& out) {
    const auto split = [](const CatalogEntry& e, const NumericResult& num, Space space) {
        return classify_by_irrep(e.framework, e.group, space == Space::edges ? num.self_stresses : num.mechanisms,
                                 space);
    };
    {
        const auto e = generate("fig10");
        const auto num = numeric_analysis(e.framework);
        out.require(num.s == 1 && num.m == 1, "fig10 at delta 0: s=" + std::to_string(num.s) + " m=" +
                                                  std::to_string(num.m));
        out.require(split(e, num, Space::edges)["A'"] == 1, "fig10 self-stress is not A'");
        out.require(split(e, num, Space::velocities)["A'"] == 1, "fig10 mechanism is not A'");
    }
    {
        const auto num = numeric_analysis(generate("fig10", {{"delta", 0.05}}).framework);
        out.require(num.s == 0 && num.m == 0, "fig10 at delta 0.05 is not isostatic");
    }
    {
        const auto num = numeric_analysis(generate("fig11a").framework);
        out.require(num.s == 0 && num.m == 0, "fig11a is not isostatic");
    }
    {
        const auto e = generate("fig11b");
        const auto num = numeric_analysis(e.framework);
        out.require(num.s == 2, "fig11b s=" + std::to_string(num.s));
        const auto d = split(e, num, Space::edges);
        out.require(d["A'"] == 1 && d["A''"] == 1, "fig11b self-stresses are not one A' and one A''");
    }
    {
        const auto num = numeric_analysis(generate("fig12a").framework);
        out.require(num.s == 0 && num.m == 5, "fig12a s=" + std::to_string(num.s) + " m=" + std::to_string(num.m));
    }
    {
        const auto num = numeric_analysis(generate("fig12b").framework);
        out.require(num.s == 9, "fig12b s=" + std::to_string(num.s));
    }
}

void affine_invariance(Outcome& out) {
    const auto fw = generate("fig9a").framework;
    const Eigen::Matrix2d stretch = Eigen::Vector2d(1.5, 1.0).asDiagonal();
    const int before = numeric_analysis(fw).s;
    const int after = numeric_analysis(affine_map(fw, stretch)).s;
    out.require(before == after, "s changed from " + std::to_string(before) + " to " + std::to_string(after));
    out.note = "s = " + std::to_string(before);
}

void large_grid(Outcome& out) {
    const auto start = Clock::now();
    const auto e = generate("quadgrid", {{"n", 24}});
    const auto report = analyze(e.framework, e.group);
    const auto v = verify(e.framework, e.group);
    const double t = seconds_since(start);
    out.require(v.passed(), "verification failed");
    out.require(v.s == 48, "s=" + std::to_string(v.s));
    out.require(report.k == v.m - v.s, "k does not match the numeric counts");
    out.require(t < 10.0, "took " + std::to_string(t) + " s");
}

void command_line(Outcome& out) {
    const std::string cmd = std::string("bash \"") + SYMSTRESS_HARNESS_PATH + "\" \"" + SYMSTRESS_CLI_PATH + "\"";
    const int status = std::system(cmd.c_str());
    out.require(status == 0, "harness exited with status " + std::to_string(status));
}

}  // namespace

int main() {
    int failed = 0;
    failed += run(1, "published decompositions are reproduced exactly", published_decompositions);
    failed += run(2, "C4v spider web: closed form agrees, 11 detected self-stresses", spider_web);
    failed += run(3, "closed forms match the general reduction on random censuses", census_sweep);
    failed += run(4, "trigonometric sums for n = 3..24", trig_sums);
    failed += run(5, "numeric verification of every catalog framework", verify_catalog);
    failed += run(6, "special-position dichotomies", special_positions);
    failed += run(7, "self-stress count is invariant under a non-symmetric stretch", affine_invariance);
    failed += run(8, "24 x 24 pinned grid analysed and verified", large_grid);
    failed += run(9, "command-line harness", command_line);
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed") << '\n';
    return failed == 0 ? 0 : 1;
}
