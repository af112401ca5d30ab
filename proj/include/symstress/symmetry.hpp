#pragma once

#include "symstress/framework.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <vector>

namespace symstress {

/// Isometry of the plane fixing the origin.
struct SymmetryOperation {
    enum class Kind { identity, rotation, reflection };

    Kind kind = Kind::identity;
    int step = 0;         // rotation by 2*pi*step/order
    int order = 1;
    double angle = 0.0;   // mirror direction in [0, pi), radians from +x

    static SymmetryOperation identity() { return {}; }
    static SymmetryOperation rotation(int step, int order);
    static SymmetryOperation reflection(double angle);

    /// Orthogonal 2x2 matrix T(g).
    Eigen::Matrix2d matrix() const;
    /// Rotation angle of a rotation (0 for identity and reflections).
    double rotation_angle() const;
    bool is_half_turn() const { return kind == Kind::rotation && 2 * step == order; }
    std::string name() const;
};

Point2 apply_op(const SymmetryOperation& op, Point2 p);

enum class Family { Cn, Cnv };

struct ConjugacyClass {
    std::string label;          // "E", "2C4", "C2", "2σv", ...
    std::vector<int> members;   // indices into PointGroup::elements()
    int representative() const { return members.front(); }
    int size() const { return static_cast<int>(members.size()); }
};

/// Cyclic (C_n) or dihedral (C_nv) point group acting about `center`.
///
/// Elements are listed as E, C, C^2, ..., C^{n-1}, then (C_nv) the n mirrors
/// at angles mirror_ref_angle + k*pi/n. Classes follow the canonical order
/// E, rotation classes by increasing step (for C_nv the pairs {C^j, C^-j},
/// so C_2 comes last), reference mirror class, second mirror class.
class PointGroup {
public:
    PointGroup() : PointGroup(Family::Cn, 1) {}
    PointGroup(Family family, int n, double mirror_ref_angle = 0.0, Point2 center = {});

    Family family() const { return family_; }
    int n() const { return n_; }
    double mirror_ref_angle() const { return mirror_ref_angle_; }
    Point2 center() const { return center_; }
    int order() const { return static_cast<int>(elements_.size()); }

    const std::vector<SymmetryOperation>& elements() const { return elements_; }
    const SymmetryOperation& element(int i) const { return elements_[static_cast<std::size_t>(i)]; }
    const std::vector<ConjugacyClass>& classes() const { return classes_; }
    int class_count() const { return static_cast<int>(classes_.size()); }
    /// Conjugacy class index of element i.
    int class_of(int element) const { return class_of_[static_cast<std::size_t>(element)]; }

    /// Index of the product g_a * g_b (apply b first).
    int multiply(int a, int b) const { return table_[static_cast<std::size_t>(a * order() + b)]; }
    int inverse(int a) const;

    /// Schoenflies name: C1, Cs, C2, C3, C2v, C4v, ...
    std::string name() const;
    bool has_half_turn() const { return n_ % 2 == 0; }
    /// Class indices of the mirror classes (empty for C_n).
    std::vector<int> mirror_classes() const;
    /// Class index holding the half-turn, or -1.
    int half_turn_class() const;

    /// Same group, translated to a new centre.
    PointGroup centred_at(Point2 c) const;

private:
    Family family_;
    int n_;
    double mirror_ref_angle_;
    Point2 center_;
    std::vector<SymmetryOperation> elements_;
    std::vector<ConjugacyClass> classes_;
    std::vector<int> class_of_;
    std::vector<int> table_;
};

/// Build C_n or C_nv. (Cnv, 1) is presented as C_s.
PointGroup group_elements(Family family, int n, double mirror_ref_angle = 0.0);

inline constexpr double default_symmetry_tolerance = 1e-9;

/// Joint permutation pi with g(p_i) = p_{pi(i)} about `center`; must preserve
/// pinning and map bars onto bars. Throws NotSymmetric.
std::vector<int> vertex_permutation(const Framework& fw, const SymmetryOperation& op,
                                    double tol = default_symmetry_tolerance, Point2 center = {});

/// Bar permutation induced by a joint permutation.
std::vector<int> edge_permutation(const Framework& fw, const std::vector<int>& vertex_perm);
std::vector<int> edge_permutation(const Framework& fw, const SymmetryOperation& op,
                                  double tol = default_symmetry_tolerance, Point2 center = {});

/// Joint and bar permutations for every element of a group.
struct GroupAction {
    std::vector<std::vector<int>> vertex;
    std::vector<std::vector<int>> edge;
};
GroupAction group_action(const Framework& fw, const PointGroup& group,
                         double tol = default_symmetry_tolerance);

struct ClassCensus {
    std::string label;
    int size = 0;
    int unshifted_vertices = 0;   // internal joints only when pinned
    int unshifted_edges = 0;
};

/// Unshifted joint and bar counts per conjugacy class, with the derived
/// aliases used by the counting formulas.
struct SymmetryCensus {
    int v = 0;   // internal joints when pinned
    int e = 0;
    bool pinned = false;
    std::vector<ClassCensus> classes;   // canonical class order of the group

    int v_c = 0;                  // joints on the rotation centre (0 without rotations)
    int e_2 = 0;                  // bars fixed by the half-turn (0 when absent)
    std::vector<int> e_sigma;     // per mirror class, in class order
    std::vector<int> v_sigma;

    int freedom_number() const { return pinned ? 2 * v - e : 2 * v - e - 3; }
};

SymmetryCensus census(const Framework& fw, const PointGroup& group,
                      double tol = default_symmetry_tolerance);

/// Census assembled from the aggregate counts (for frameworks known only by
/// their counts, and for synthetic sweeps). `mirror_edges` / `mirror_vertices`
/// are per mirror class; rotation classes receive v_c joints and (half-turn
/// only) e_2 bars.
SymmetryCensus make_census(const PointGroup& group, int v, int e, int v_c, int e_2,
                           std::vector<int> mirror_edges, std::vector<int> mirror_vertices,
                           bool pinned);

/// Every point group realised by the framework about its joint centroid,
/// largest order first. Always contains C1.
std::vector<PointGroup> detect_groups(const Framework& fw, double tol = default_symmetry_tolerance);

}  // namespace symstress
