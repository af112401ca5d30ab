#pragma once

#include "symstress/framework.hpp"
#include "symstress/reptheory.hpp"
#include "symstress/symmetry.hpp"

#include <Eigen/Dense>

#include <string>
#include <vector>

namespace symstress {

/// Force density per bar, in edge order.
using StressVector = Eigen::VectorXd;

/// Singular values above rel_tol * sigma_max * max(rows, cols).
int numeric_rank(const Eigen::MatrixXd& matrix, double rel_tol = default_rank_tolerance);

/// Rank and null spaces of the analysis matrix from a single SVD.
struct NumericResult {
    int rows = 0;
    int cols = 0;
    int rank = 0;
    int s = 0;
    int m = 0;
    int k = 0;
    Eigen::VectorXd singular_values;
    Eigen::MatrixXd self_stresses;   // e x s, orthonormal columns
    Eigen::MatrixXd mechanisms;      // cols x m, orthonormal, orthogonal to trivial
    Eigen::MatrixXd trivial;         // cols x 3 unpinned, cols x 0 pinned
};

/// Throws DegenerateSpan for an unpinned framework whose joints are collinear.
NumericResult numeric_analysis(const Framework& fw, double rel_tol = default_rank_tolerance);

std::vector<StressVector> self_stress_basis(const Framework& fw, double rel_tol = default_rank_tolerance);
std::vector<Eigen::VectorXd> mechanism_basis(const Framework& fw, double rel_tol = default_rank_tolerance);

/// Orthonormal translations and rotation about `center` (free frameworks only).
Eigen::MatrixXd trivial_motion_basis(const Framework& fw, Point2 center = {});

/// Largest joint imbalance sum_j w_ij (p_i - p_j) over the free joints.
double equilibrium_residual(const Framework& fw, const StressVector& w);

enum class Space { edges, velocities };

struct IrrepDimensions {
    std::vector<std::string> labels;
    std::vector<int> dimensions;   // rank of the projector on the span, per irrep

    int operator[](const std::string& label) const;
    int total() const;
};

/// Dimension of each isotypic component of span(basis). The basis must have
/// orthonormal columns spanning an invariant subspace; DimensionMismatch otherwise.
IrrepDimensions classify_by_irrep(const Framework& fw, const PointGroup& group, const GroupAction& action,
                                  const Eigen::MatrixXd& basis, Space space);
IrrepDimensions classify_by_irrep(const Framework& fw, const PointGroup& group, const Eigen::MatrixXd& basis,
                                  Space space, double tol = default_symmetry_tolerance);

/// max_g ||R - P_E(g)^-1 R (P_V x T)(g)||_inf / ||R||_inf.
double intertwining_residual(const Framework& fw, const PointGroup& group, const GroupAction& action,
                             const Eigen::MatrixXd& r);

/// max over both spaces of ||sum_i Pi_i - I||_inf.
double resolution_of_identity_residual(const Framework& fw, const PointGroup& group, const GroupAction& action);

struct VerificationCheck {
    std::string name;
    bool passed = false;
    std::string detail;
};

struct IrrepVerification {
    std::string label;
    int dimension = 1;
    int gamma = 0;
    int s = 0;
    int m = 0;
    int trivial = 0;
    int detected_s = 0;
};

struct VerificationReport {
    std::string group_name;
    int k = 0;
    int rank = 0;
    int s = 0;
    int m = 0;
    int surplus = 0;   // numeric s beyond max(0, -k)
    double intertwining = 0.0;
    double identity = 0.0;
    std::vector<IrrepVerification> irreps;
    std::vector<VerificationCheck> checks;

    bool passed() const;
};

struct VerifyOptions {
    double sym_tol = default_symmetry_tolerance;
    double rank_tol = default_rank_tolerance;
    double residual_tol = 1e-9;
};

/// Symbolic and numeric counts side by side. Check failures are recorded, not thrown;
/// symmetry errors (NotSymmetric, ClassMismatch) still propagate.
VerificationReport verify(const Framework& fw, const PointGroup& group, const VerifyOptions& options = {});

}  // namespace symstress
