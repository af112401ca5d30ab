#include "symstress/framework.hpp"

#include "symstress/errors.hpp"
#include "symstress/numeric.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace symstress {

Graph::Graph(int vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    if (vertex_count_ < 0) throw InvalidFramework("negative vertex count");
    incidence_.resize(static_cast<std::size_t>(vertex_count_));
    for (std::size_t k = 0; k < edges_.size(); ++k) {
        const auto [a, b] = edges_[k];
        if (a < 0 || b < 0 || a >= vertex_count_ || b >= vertex_count_)
            throw InvalidFramework("edge " + std::to_string(k) + " references an unknown vertex");
        if (a == b) throw InvalidFramework("edge " + std::to_string(k) + " is a self-loop");
        if (find_edge(a, b) >= 0)
            throw InvalidFramework("duplicate edge " + std::to_string(a) + "-" + std::to_string(b));
        incidence_[static_cast<std::size_t>(a)].emplace_back(b, static_cast<int>(k));
        incidence_[static_cast<std::size_t>(b)].emplace_back(a, static_cast<int>(k));
    }
}

int Graph::find_edge(int a, int b) const {
    if (a < 0 || a >= vertex_count_) return -1;
    for (const auto& [nb, index] : incidence_[static_cast<std::size_t>(a)])
        if (nb == b) return index;
    return -1;
}

Framework::Framework(Graph graph, std::vector<Point2> positions, std::vector<int> pinned)
    : graph_(std::move(graph)), positions_(std::move(positions)) {
    const int v = graph_.vertex_count();
    if (static_cast<int>(positions_.size()) != v)
        throw InvalidFramework("expected " + std::to_string(v) + " positions, got " +
                               std::to_string(positions_.size()));
    for (int i = 0; i < v; ++i) {
        const auto& p = positions_[static_cast<std::size_t>(i)];
        if (!std::isfinite(p.x) || !std::isfinite(p.y))
            throw InvalidFramework("vertex " + std::to_string(i) + " has a non-finite coordinate");
    }

    // Coincident joints: sort by x and compare neighbours within the same x.
    std::vector<int> order(static_cast<std::size_t>(v));
    for (int i = 0; i < v; ++i) order[static_cast<std::size_t>(i)] = i;
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        const auto& pa = positions_[static_cast<std::size_t>(a)];
        const auto& pb = positions_[static_cast<std::size_t>(b)];
        return pa.x < pb.x || (pa.x == pb.x && pa.y < pb.y);
    });
    for (std::size_t k = 1; k < order.size(); ++k) {
        if (positions_[static_cast<std::size_t>(order[k])] ==
            positions_[static_cast<std::size_t>(order[k - 1])])
            throw InvalidFramework("vertices " + std::to_string(order[k - 1]) + " and " +
                                   std::to_string(order[k]) + " coincide");
    }

    pinned_flags_.assign(static_cast<std::size_t>(v), false);
    for (int p : pinned) {
        if (p < 0 || p >= v) throw InvalidFramework("pinned id " + std::to_string(p) + " out of range");
        if (!pinned_flags_[static_cast<std::size_t>(p)]) {
            pinned_flags_[static_cast<std::size_t>(p)] = true;
            ++pinned_count_;
        }
    }
    if (pinned_count_ > 0 && pinned_count_ == v)
        throw InvalidFramework("every vertex is pinned");

    free_index_.assign(static_cast<std::size_t>(v), -1);
    int next = 0;
    for (int i = 0; i < v; ++i)
        if (!pinned_flags_[static_cast<std::size_t>(i)]) free_index_[static_cast<std::size_t>(i)] = next++;
}

std::vector<int> Framework::free_vertices() const {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(internal_count()));
    for (int i = 0; i < vertex_count(); ++i)
        if (!pinned(i)) out.push_back(i);
    return out;
}

double Framework::scale() const {
    if (positions_.empty()) return 1.0;
    double xmin = positions_[0].x, xmax = xmin, ymin = positions_[0].y, ymax = ymin;
    for (const auto& p : positions_) {
        xmin = std::min(xmin, p.x);
        xmax = std::max(xmax, p.x);
        ymin = std::min(ymin, p.y);
        ymax = std::max(ymax, p.y);
    }
    const double d = std::hypot(xmax - xmin, ymax - ymin);
    return d > 0.0 ? d : 1.0;
}

namespace {

Eigen::MatrixXd build_rows(const Framework& fw, bool drop_pinned) {
    const int cols = 2 * (drop_pinned ? fw.internal_count() : fw.vertex_count());
    Eigen::MatrixXd r = Eigen::MatrixXd::Zero(fw.edge_count(), cols);
    for (int k = 0; k < fw.edge_count(); ++k) {
        const auto [i, j] = fw.graph().edge(k);
        const Point2 d = fw.position(i) - fw.position(j);
        const int ci = drop_pinned ? fw.free_index(i) : i;
        const int cj = drop_pinned ? fw.free_index(j) : j;
        if (ci >= 0) {
            r(k, 2 * ci) = d.x;
            r(k, 2 * ci + 1) = d.y;
        }
        if (cj >= 0) {
            r(k, 2 * cj) = -d.x;
            r(k, 2 * cj + 1) = -d.y;
        }
    }
    return r;
}

}  // namespace

Eigen::MatrixXd rigidity_matrix(const Framework& fw) { return build_rows(fw, false); }

Eigen::MatrixXd rigidity_matrix_pinned(const Framework& fw) {
    if (!fw.is_pinned()) throw InvalidFramework("rigidity_matrix_pinned needs at least one pinned vertex");
    return build_rows(fw, true);
}

Eigen::MatrixXd analysis_matrix(const Framework& fw) {
    return fw.is_pinned() ? rigidity_matrix_pinned(fw) : rigidity_matrix(fw);
}

int maxwell_count(const Framework& fw) {
    if (fw.is_pinned()) return 2 * fw.internal_count() - fw.edge_count();
    return 2 * fw.vertex_count() - fw.edge_count() - 3;
}

int affine_span_dim(const Framework& fw, double rel_tol) {
    const int v = fw.vertex_count();
    if (v == 0) return 0;
    Eigen::MatrixXd centred(v, 2);
    double cx = 0.0, cy = 0.0;
    for (const auto& p : fw.positions()) {
        cx += p.x;
        cy += p.y;
    }
    cx /= v;
    cy /= v;
    for (int i = 0; i < v; ++i) {
        centred(i, 0) = fw.position(i).x - cx;
        centred(i, 1) = fw.position(i).y - cy;
    }
    return numeric_rank(centred, rel_tol);
}

namespace {

double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }

// Signed area test with an absolute tolerance on the distance of c from line ab.
int orientation(Point2 a, Point2 b, Point2 c, double eps) {
    const Point2 ab = b - a;
    const double len = std::hypot(ab.x, ab.y);
    const double dist = cross(ab, c - a) / (len > 0.0 ? len : 1.0);
    if (dist > eps) return 1;
    if (dist < -eps) return -1;
    return 0;
}

// Strict interior of segment ab contains c (within eps).
bool on_open_segment(Point2 a, Point2 b, Point2 c, double eps) {
    if (orientation(a, b, c, eps) != 0) return false;
    const Point2 ab = b - a;
    const double len2 = ab.x * ab.x + ab.y * ab.y;
    const double t = ((c - a).x * ab.x + (c - a).y * ab.y) / len2;
    const double margin = eps / std::sqrt(len2);
    return t > margin && t < 1.0 - margin;
}

}  // namespace

std::vector<PlanarityIssue> check_planarity(const Framework& fw, double tol) {
    const double eps = tol * fw.scale();
    const auto& edges = fw.graph().edges();
    std::vector<PlanarityIssue> issues;

    for (int k = 0; k < fw.edge_count(); ++k) {
        const Point2 a = fw.position(edges[static_cast<std::size_t>(k)].a);
        const Point2 b = fw.position(edges[static_cast<std::size_t>(k)].b);
        for (int v = 0; v < fw.vertex_count(); ++v) {
            if (v == edges[static_cast<std::size_t>(k)].a || v == edges[static_cast<std::size_t>(k)].b) continue;
            if (on_open_segment(a, b, fw.position(v), eps))
                issues.push_back({PlanarityIssue::Kind::bar_through_joint, k, v});
        }
    }

    for (int k = 0; k < fw.edge_count(); ++k) {
        const Edge ek = edges[static_cast<std::size_t>(k)];
        const Point2 a = fw.position(ek.a), b = fw.position(ek.b);
        for (int l = k + 1; l < fw.edge_count(); ++l) {
            const Edge el = edges[static_cast<std::size_t>(l)];
            if (el.a == ek.a || el.a == ek.b || el.b == ek.a || el.b == ek.b) continue;
            const Point2 c = fw.position(el.a), d = fw.position(el.b);
            const int o1 = orientation(a, b, c, eps), o2 = orientation(a, b, d, eps);
            const int o3 = orientation(c, d, a, eps), o4 = orientation(c, d, b, eps);
            // Touching configurations (some o == 0) are bar-through-joint cases, reported above.
            if (o1 * o2 < 0 && o3 * o4 < 0) issues.push_back({PlanarityIssue::Kind::crossing, k, l});
        }
    }
    return issues;
}

}  // namespace symstress
