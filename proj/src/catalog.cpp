#include "symstress/catalog.hpp"

#include "catalog_data.hpp"
#include "symstress/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace symstress {

namespace {

constexpr double pi = std::numbers::pi;
constexpr Provenance published = Provenance::published;
constexpr Provenance derived = Provenance::derived;

const detail::RawFigure& raw(const std::string& name) {
    for (const auto& f : detail::raw_figures())
        if (f.name == name) return f;
    throw UnknownEntry("no figure data for " + name);
}

Framework from_raw(const std::string& name, Point2 shift = {}) {
    const auto& f = raw(name);
    std::vector<Point2> pts;
    pts.reserve(f.points.size());
    for (const auto& p : f.points) pts.push_back(p + shift);
    Graph graph(static_cast<int>(pts.size()), f.edges);
    return Framework(std::move(graph), std::move(pts));
}

PointGroup cs_vertical() { return PointGroup(Family::Cnv, 1, pi / 2); }
PointGroup cs_horizontal() { return PointGroup(Family::Cnv, 1, 0.0); }
PointGroup c2v() { return PointGroup(Family::Cnv, 2, 0.0); }
PointGroup c4v() { return PointGroup(Family::Cnv, 4, 0.0); }

double param(const CatalogParams& params, const std::string& key, double fallback) {
    const auto it = params.find(key);
    return it == params.end() ? fallback : it->second;
}

void check_params(const std::string& name, const CatalogParams& params, std::vector<std::string> allowed) {
    for (const auto& [key, value] : params) {
        if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
            throw UnknownEntry(name + " has no parameter '" + key + "'");
        if (!std::isfinite(value)) throw DomainError(name + ": parameter '" + key + "' is not finite");
    }
}

// Intersection of line(a, b) with the horizontal y = h.
Point2 meet_horizontal(Point2 a, Point2 b, double h) {
    const double t = (h - a.y) / (b.y - a.y);
    return a + t * (b - a);
}

Point2 meet_vertical(Point2 a, Point2 b, double x) {
    const double t = (x - a.x) / (b.x - a.x);
    return a + t * (b - a);
}

// Triangle on the mirror with two wings; the joint p7 sits where it makes the
// points a, p8 and p7 collinear, a being where line(p6, p2) meets the top level.
Framework fig10(double delta) {
    const double r = 2.2;
    const Point2 p1{0.0, r};
    const Point2 p2{r * std::cos(162.0 * pi / 180.0), r * std::sin(162.0 * pi / 180.0)};
    const Point2 p5{-p2.x, p2.y};
    const Point2 p6{0.0, -0.15};
    const Point2 p8{-1.0, 0.7};
    const Point2 p9{1.0, 0.7};
    const Point2 a = meet_horizontal(p6, p2, r);
    Point2 p7 = meet_vertical(a, p8, 0.0);
    p7.y += delta;
    std::vector<Point2> pts{p1, p2, p5, p6, p7, p8, p9};
    std::vector<Edge> edges{{0, 1}, {0, 5}, {0, 6}, {0, 2}, {1, 5}, {2, 6},
                            {3, 4}, {1, 3}, {2, 3}, {4, 5}, {4, 6}};
    return Framework(Graph(7, std::move(edges)), std::move(pts));
}

// n x n internal joints at unit spacing, every row and column ending in two pins.
Framework quadgrid(int n) {
    std::vector<Point2> pts;
    std::vector<int> pinned;
    const double h = (n - 1) / 2.0;
    auto id = [n](int i, int j) { return j * n + i; };
    for (int j = 0; j < n; ++j)
        for (int i = 0; i < n; ++i) pts.push_back({i - h, j - h});
    std::vector<Edge> edges;
    for (int j = 0; j < n; ++j)
        for (int i = 0; i + 1 < n; ++i) edges.push_back({id(i, j), id(i + 1, j)});
    for (int i = 0; i < n; ++i)
        for (int j = 0; j + 1 < n; ++j) edges.push_back({id(i, j), id(i, j + 1)});

    auto add_pin = [&](Point2 p, int neighbour) {
        const int v = static_cast<int>(pts.size());
        pts.push_back(p);
        pinned.push_back(v);
        edges.push_back({neighbour, v});
    };
    for (int j = 0; j < n; ++j) {
        add_pin({-h - 1.0, j - h}, id(0, j));
        add_pin({h + 1.0, j - h}, id(n - 1, j));
    }
    for (int i = 0; i < n; ++i) {
        add_pin({i - h, -h - 1.0}, id(i, 0));
        add_pin({i - h, h + 1.0}, id(i, n - 1));
    }
    Graph graph(static_cast<int>(pts.size()), std::move(edges));
    return Framework(std::move(graph), std::move(pts), std::move(pinned));
}

CatalogEntry make(std::string name, std::string description, Framework fw, PointGroup group) {
    CatalogEntry e;
    e.name = std::move(name);
    e.description = std::move(description);
    e.framework = std::move(fw);
    e.group = std::move(group);
    return e;
}

}  // namespace

const Expectation* CatalogEntry::find(const std::string& quantity) const {
    for (const auto& e : expectations)
        if (e.quantity == quantity) return &e;
    return nullptr;
}

std::vector<std::string> catalog_names() {
    return {"fig2a", "fig2b", "fig2c", "fig3",   "fig4a",  "fig4b",  "fig4c",  "fig6a",  "fig6b",   "fig8a",
            "fig8b", "fig9a", "fig9b", "fig10",  "fig11a", "fig11b", "fig12a", "fig12b", "quadgrid"};
}

Framework affine_map(const Framework& fw, const Eigen::Matrix2d& a, const Eigen::Vector2d& t) {
    const double det = a.determinant();
    if (!std::isfinite(det) || std::abs(det) <= 1e-12 * a.squaredNorm()) throw SingularMap("affine map is singular");
    std::vector<Point2> pts;
    pts.reserve(fw.positions().size());
    for (const auto& p : fw.positions()) {
        const Eigen::Vector2d q = a * Eigen::Vector2d(p.x, p.y) + t;
        pts.push_back({q.x(), q.y()});
    }
    std::vector<int> pinned;
    for (int v = 0; v < fw.vertex_count(); ++v)
        if (fw.pinned(v)) pinned.push_back(v);
    return Framework(fw.graph(), std::move(pts), std::move(pinned));
}

CatalogEntry generate(const std::string& name, const CatalogParams& params) {
    const auto names = catalog_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) throw UnknownEntry("unknown catalog entry '" + name + "'");
    if (name == "fig9b") check_params(name, params, {"stretch"});
    else if (name == "fig10") check_params(name, params, {"delta"});
    else if (name == "quadgrid") check_params(name, params, {"n"});
    else check_params(name, params, {});

    if (name == "fig2a") {
        auto e = make(name, "isostatic framework with a vertical mirror", from_raw(name), cs_vertical());
        e.expectations = {{"v", 7, derived}, {"e", 11, derived}, {"k", 0, derived}, {"e_sigma:σ", 1, published},
                          {"s", 0, derived},  {"m", 0, derived}};
        e.decompositions = {{cs_vertical(), {}, derived}};
        return e;
    }
    if (name == "fig2b") {
        auto e = make(name, "cube-in-square drawing with a vertical mirror", from_raw(name), cs_vertical());
        e.expectations = {{"v", 8, derived},  {"e", 12, published}, {"k", 1, derived},
                          {"e_sigma:σ", 4, published}, {"s", 1, derived}, {"m", 2, derived}};
        e.decompositions = {{cs_vertical(), {{"A'", -1}, {"A''", 2}}, derived}};
        return e;
    }
    if (name == "fig2c") {
        // Shifted so that the half-turn centre is the origin.
        auto e = make(name, "two triangles related by a half-turn", from_raw(name, {0.0, 1.25}),
                      PointGroup(Family::Cn, 2));
        e.expectations = {{"v", 6, derived}, {"e", 9, derived}, {"k", 0, derived}, {"v_c", 0, published},
                          {"e_2", 1, published}, {"s", 0, derived}, {"m", 0, derived}};
        e.decompositions = {{PointGroup(Family::Cn, 2), {}, derived}};
        return e;
    }
    if (name == "fig3") {
        auto e = make(name, "nested triangles with a vertical mirror", from_raw(name), cs_vertical());
        e.expectations = {{"v", 6, derived},      {"e", 9, derived},       {"k", 0, derived},
                          {"e_sigma:σ", 3, derived}, {"s", 1, published},     {"m", 1, published},
                          {"s:A'", 1, published}, {"m:A''", 1, published}};
        e.decompositions = {{cs_vertical(), {{"A'", -1}, {"A''", 1}}, derived}};
        return e;
    }
    if (name == "fig4a" || name == "fig4b") {
        const bool a = name == "fig4a";
        auto e = make(name, a ? "mirror-symmetric framework with no bar on the mirror"
                              : "same graph as fig4a with four bars fixed by the mirror",
                      from_raw(name), cs_vertical());
        e.expectations = {{"v", 13, published}, {"e", 24, published}, {"k", -1, published},
                          {"e_sigma:σ", a ? 0 : 4, published}, {"s", 2, derived}, {"m", 1, derived}};
        e.decompositions = {{cs_vertical(),
                             a ? std::vector<std::pair<std::string, int>>{{"A''", -1}}
                               : std::vector<std::pair<std::string, int>>{{"A'", -2}, {"A''", 1}},
                             published}};
        return e;
    }
    if (name == "fig4c") {
        auto e = make(name, "mirror-symmetric framework with k = 1", from_raw(name), cs_vertical());
        e.expectations = {{"v", 12, derived},        {"e", 20, derived}, {"k", 1, published},
                          {"e_sigma:σ", 4, derived}, {"s", 1, derived},  {"m", 2, derived}};
        e.decompositions = {{cs_vertical(), {{"A'", -1}, {"A''", 2}}, published}};
        return e;
    }
    if (name == "fig6a") {
        auto e = make(name, "C2v framework with a bar across the centre", from_raw(name), c2v());
        e.expectations = {{"v", 16, published},       {"e", 31, published},      {"k", -2, published},
                          {"v_c", 0, derived},        {"e_2", 1, derived},       {"e_sigma:σh", 5, published},
                          {"e_sigma:σv", 3, published}, {"s", 3, derived},       {"m", 1, derived},
                          {"s:A1", 2, derived},       {"s:B1", 1, derived}};
        e.decompositions = {{c2v(), {{"A1", -2}, {"A2", 1}, {"B1", -1}}, published},
                            {cs_horizontal(), {{"A'", -3}, {"A''", 1}}, derived}};
        return e;
    }
    if (name == "fig6b") {
        auto e = make(name, "fig6a with extra bars, five on each mirror", from_raw(name), c2v());
        e.expectations = {{"v", 18, published},       {"e", 37, published},      {"k", -4, published},
                          {"v_c", 0, derived},        {"e_2", 1, published},     {"e_sigma:σh", 5, published},
                          {"e_sigma:σv", 5, published}, {"s", 5, derived},       {"m", 1, derived}};
        e.decompositions = {{c2v(), {{"A1", -3}, {"A2", 1}, {"B1", -1}, {"B2", -1}}, published},
                            {cs_horizontal(), {{"A'", -4}}, derived}};
        return e;
    }
    if (name == "fig8a" || name == "fig8b") {
        const bool a = name == "fig8a";
        auto e = make(name, a ? "C4v framework with k = -3" : "C4v framework with k = -11", from_raw(name), c4v());
        if (a) {
            e.expectations = {{"v", 28, published},        {"e", 56, published},        {"k", -3, derived},
                              {"v_c", 0, derived},         {"e_sigma:2σv", 6, published}, {"e_sigma:2σd", 2, published},
                              {"s", 5, derived},           {"m", 2, derived}};
            e.decompositions = {{c4v(), {{"A1", -2}, {"A2", 1}, {"B1", -1}, {"B2", 1}, {"E", -1}}, published},
                                {c2v(), {{"A1", -3}, {"A2", 2}, {"B1", -1}, {"B2", -1}}, derived}};
        } else {
            e.expectations = {{"v", 48, published},        {"e", 104, published},       {"k", -11, published},
                              {"v_c", 0, derived},         {"e_sigma:2σv", 6, published}, {"e_sigma:2σd", 6, published},
                              {"s", 12, derived},          {"m", 1, derived}};
            e.decompositions = {{c4v(), {{"A1", -4}, {"A2", 1}, {"B1", -1}, {"B2", -1}, {"E", -3}}, published},
                                {c2v(), {{"A1", -5}, {"B1", -3}, {"B2", -3}}, derived}};
        }
        return e;
    }
    if (name == "fig9a") {
        auto e = make(name, "spider web with a centre joint", from_raw(name), c4v());
        e.expectations = {{"v", 33, derived},          {"e", 72, derived},           {"k", -9, published},
                          {"v_c", 1, published},       {"e_sigma:2σv", 8, published}, {"e_sigma:2σd", 8, published},
                          {"s", 11, derived},          {"m", 2, derived}};
        e.decompositions = {{cs_vertical(), {{"A'", -8}, {"A''", -1}}, published},
                            {c2v(), {{"A1", -6}, {"A2", 1}, {"B1", -2}, {"B2", -2}}, published},
                            {c4v(), {{"A1", -5}, {"A2", 2}, {"B1", -1}, {"B2", -1}, {"E", -2}}, derived}};
        return e;
    }
    if (name == "fig9b") {
        const double stretch = param(params, "stretch", 1.5);
        Eigen::Matrix2d m;
        m << stretch, 0.0, 0.0, 1.0;
        auto e = make(name, "horizontal stretch of fig9a", affine_map(from_raw("fig9a"), m), c2v());
        e.expectations = {{"v", 33, derived}, {"e", 72, derived}, {"k", -9, derived}, {"s", 11, derived},
                          {"m", 2, derived}};
        e.decompositions = {{c2v(), {{"A1", -6}, {"A2", 1}, {"B1", -2}, {"B2", -2}}, derived}};
        return e;
    }
    if (name == "fig10") {
        const double delta = param(params, "delta", 0.0);
        auto e = make(name, "isostatic graph at a special position controlled by delta", fig10(delta), cs_vertical());
        e.expectations = {{"v", 7, derived}, {"e", 11, derived}, {"k", 0, derived}, {"e_sigma:σ", 1, derived}};
        if (delta == 0.0) {
            e.expectations.insert(e.expectations.end(), {{"s", 1, published}, {"m", 1, published},
                                                          {"s:A'", 1, derived}, {"m:A'", 1, derived}});
        } else {
            e.expectations.insert(e.expectations.end(), {{"s", 0, published}, {"m", 0, published}});
        }
        e.decompositions = {{cs_vertical(), {}, derived}};
        return e;
    }
    if (name == "fig11a" || name == "fig11b") {
        const bool a = name == "fig11a";
        auto e = make(name, a ? "generic position of the two-triangle graph" : "Desargues position of the same graph",
                      from_raw(name), cs_vertical());
        e.expectations = {{"v", 10, derived}, {"e", 17, derived}, {"k", 0, derived}, {"e_sigma:σ", 1, derived}};
        if (a) {
            e.expectations.insert(e.expectations.end(), {{"s", 0, published}, {"m", 0, published}});
        } else {
            e.expectations.insert(e.expectations.end(), {{"s", 2, published}, {"m", 2, derived},
                                                          {"s:A'", 1, published}, {"s:A''", 1, published}});
        }
        e.decompositions = {{cs_vertical(), {}, derived}};
        return e;
    }
    if (name == "fig12a" || name == "fig12b") {
        const bool a = name == "fig12a";
        // Shifted so that the centre of the square grid is the origin.
        auto e = make(name, a ? "three by three grid of squares" : "grid with a braced framework in each face",
                      from_raw(name, {-2.0, 3.0}), c4v());
        if (a) {
            e.expectations = {{"v", 16, derived}, {"e", 24, derived}, {"k", 5, published},
                              {"s", 0, published}, {"m", 5, published}};
        } else {
            e.expectations = {{"v", 52, derived}, {"e", 96, derived}, {"k", 5, published},
                              {"s", 9, published}, {"m", 14, derived}};
        }
        return e;
    }
    // quadgrid
    const double nd = param(params, "n", 24.0);
    if (nd < 2.0 || nd > 200.0 || nd != std::floor(nd)) throw DomainError("quadgrid: n must be an integer in [2, 200]");
    const int n = static_cast<int>(nd);
    auto e = make(name, "synthetic pinned square grid (not from a figure)", quadgrid(n), c4v());
    const int k = 2 * n * n - 2 * n * (n + 1);
    e.expectations = {{"v", n * n, derived}, {"e", 2 * n * (n + 1), derived}, {"k", k, derived},
                      {"s", 2 * n, derived}, {"m", 0, derived}};
    if (n == 24)
        e.decompositions = {{c4v(), {{"A1", -12}, {"B1", -12}, {"E", -12}}, derived}};
    return e;
}

CensusEntry gridshell_census() {
    CensusEntry c;
    c.name = "gridshell";
    c.group = c2v();
    c.census = make_census(c.group, 553, 1102, 1, 0, {4, 18}, {}, true);
    c.decomposition = {c.group, {{"A1", -5}, {"A2", 6}, {"B1", 5}, {"B2", -2}}, published};
    return c;
}

}  // namespace symstress
