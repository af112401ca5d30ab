#pragma once

#include <Eigen/Dense>

#include <cstddef>
#include <vector>

namespace symstress {

struct Point2 {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point2&, const Point2&) = default;
};

inline Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
inline Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
inline Point2 operator*(double s, Point2 a) { return {s * a.x, s * a.y}; }

/// Unordered vertex pair; stored with the endpoints in input order.
struct Edge {
    int a = 0;
    int b = 0;

    friend bool operator==(const Edge&, const Edge&) = default;
};

/// Finite simple graph. Construction validates ids, loops and duplicates.
class Graph {
public:
    Graph() = default;
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return vertex_count_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(int index) const { return edges_[static_cast<std::size_t>(index)]; }

    /// Index of the edge joining a and b in either orientation, or -1.
    int find_edge(int a, int b) const;

private:
    int vertex_count_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::pair<int, int>>> incidence_;  // (neighbour, edge index)
};

/// Bar-joint framework: graph, one position per joint, optional pinned joints.
///
/// Joint positions must be finite and pairwise distinct. A non-empty pinned
/// set must leave at least one joint free.
class Framework {
public:
    Framework() = default;
    Framework(Graph graph, std::vector<Point2> positions, std::vector<int> pinned = {});

    const Graph& graph() const { return graph_; }
    const std::vector<Point2>& positions() const { return positions_; }
    const Point2& position(int v) const { return positions_[static_cast<std::size_t>(v)]; }

    int vertex_count() const { return graph_.vertex_count(); }
    int edge_count() const { return graph_.edge_count(); }

    bool is_pinned() const { return pinned_count_ > 0; }
    bool pinned(int v) const { return pinned_flags_[static_cast<std::size_t>(v)]; }
    int pinned_count() const { return pinned_count_; }
    int internal_count() const { return vertex_count() - pinned_count_; }

    /// Column block of joint v in the analysis matrix (-1 for a pinned joint).
    /// Unpinned frameworks map v -> v.
    int free_index(int v) const { return free_index_[static_cast<std::size_t>(v)]; }

    /// Joints that carry columns in the analysis matrix, in vertex order.
    std::vector<int> free_vertices() const;

    /// Diagonal of the axis-aligned bounding box (scale for relative tolerances).
    double scale() const;

private:
    Graph graph_;
    std::vector<Point2> positions_;
    std::vector<bool> pinned_flags_;
    std::vector<int> free_index_;
    int pinned_count_ = 0;
};

/// Relative singular-value cutoff shared by every rank decision in the library.
inline constexpr double default_rank_tolerance = 1e-10;

/// e x 2v rigidity matrix over all joints; rows follow edge order, columns (x, y) per joint.
Eigen::MatrixXd rigidity_matrix(const Framework& fw);

/// e x 2v_internal matrix with the columns of pinned joints removed. Throws if nothing is pinned.
Eigen::MatrixXd rigidity_matrix_pinned(const Framework& fw);

/// rigidity_matrix_pinned for pinned frameworks, rigidity_matrix otherwise.
Eigen::MatrixXd analysis_matrix(const Framework& fw);

/// Freedom number: 2v - e - 3 unpinned, 2v_internal - e pinned.
int maxwell_count(const Framework& fw);

/// Dimension (0, 1 or 2) of the affine hull of the joint positions.
int affine_span_dim(const Framework& fw, double rel_tol = default_rank_tolerance);

struct PlanarityIssue {
    enum class Kind { crossing, bar_through_joint };
    Kind kind;
    int edge = 0;
    /// Second edge for a crossing, the offending joint for bar_through_joint.
    int other = 0;

    friend bool operator==(const PlanarityIssue&, const PlanarityIssue&) = default;
};

/// Crossing bar pairs and bars passing over joints. `tol` is relative to fw.scale().
std::vector<PlanarityIssue> check_planarity(const Framework& fw, double tol = 1e-9);

}  // namespace symstress
