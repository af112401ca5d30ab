#include "symstress/numeric.hpp"

#include "symstress/counting.hpp"
#include "symstress/errors.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <sstream>

namespace symstress {

namespace {

int count_above(const Eigen::VectorXd& sv, Eigen::Index rows, Eigen::Index cols, double rel_tol) {
    if (sv.size() == 0) return 0;
    const double cutoff = rel_tol * sv(0) * static_cast<double>(std::max(rows, cols));
    int r = 0;
    for (Eigen::Index i = 0; i < sv.size(); ++i)
        if (sv(i) > cutoff) ++r;
    return r;
}

std::string fmt(double x) {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    out.precision(3);
    out << std::scientific << x;
    return out.str();
}

}  // namespace

int numeric_rank(const Eigen::MatrixXd& matrix, double rel_tol) {
    if (matrix.size() == 0) return 0;
    Eigen::BDCSVD<Eigen::MatrixXd> svd(matrix);
    return count_above(svd.singularValues(), matrix.rows(), matrix.cols(), rel_tol);
}

Eigen::MatrixXd trivial_motion_basis(const Framework& fw, Point2 center) {
    const auto free = fw.free_vertices();
    const Eigen::Index n = 2 * static_cast<Eigen::Index>(free.size());
    Eigen::MatrixXd t = Eigen::MatrixXd::Zero(n, 3);
    for (std::size_t k = 0; k < free.size(); ++k) {
        const Point2 p = fw.position(free[k]) - center;
        const auto row = 2 * static_cast<Eigen::Index>(k);
        t(row, 0) = 1.0;
        t(row + 1, 1) = 1.0;
        t(row, 2) = -p.y;
        t(row + 1, 2) = p.x;
    }
    if (affine_span_dim(fw) < 2 || numeric_rank(t) < 3)
        throw DegenerateSpan("joint positions do not span the plane");
    Eigen::HouseholderQR<Eigen::MatrixXd> qr(t);
    return qr.householderQ() * Eigen::MatrixXd::Identity(n, 3);
}

NumericResult numeric_analysis(const Framework& fw, double rel_tol) {
    NumericResult res;
    const Eigen::MatrixXd r = analysis_matrix(fw);
    res.rows = static_cast<int>(r.rows());
    res.cols = static_cast<int>(r.cols());
    res.k = maxwell_count(fw);

    Eigen::MatrixXd u, v;
    if (r.rows() > 0 && r.cols() > 0) {
        Eigen::BDCSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeFullU | Eigen::ComputeFullV);
        res.singular_values = svd.singularValues();
        res.rank = count_above(res.singular_values, r.rows(), r.cols(), rel_tol);
        u = svd.matrixU();
        v = svd.matrixV();
    } else {
        u = Eigen::MatrixXd::Identity(r.rows(), r.rows());
        v = Eigen::MatrixXd::Identity(r.cols(), r.cols());
    }
    res.s = res.rows - res.rank;
    res.self_stresses = u.rightCols(res.s);
    const Eigen::MatrixXd kernel = v.rightCols(res.cols - res.rank);

    if (fw.is_pinned()) {
        res.m = res.cols - res.rank;
        res.trivial = Eigen::MatrixXd(res.cols, 0);
        res.mechanisms = kernel;
        return res;
    }

    res.trivial = trivial_motion_basis(fw);
    res.m = res.cols - 3 - res.rank;
    if (res.m <= 0) {
        res.mechanisms = Eigen::MatrixXd(res.cols, 0);
        return res;
    }
    // Complement of the trivial motions inside the kernel, in kernel coordinates.
    const Eigen::MatrixXd q = kernel.transpose() * res.trivial;
    Eigen::JacobiSVD<Eigen::MatrixXd> qsvd(q, Eigen::ComputeFullU);
    res.mechanisms = kernel * qsvd.matrixU().rightCols(res.m);
    return res;
}

std::vector<StressVector> self_stress_basis(const Framework& fw, double rel_tol) {
    const Eigen::MatrixXd r = analysis_matrix(fw);
    std::vector<StressVector> out;
    if (r.rows() == 0) return out;
    if (r.cols() == 0) {
        for (Eigen::Index i = 0; i < r.rows(); ++i) out.push_back(Eigen::VectorXd::Unit(r.rows(), i));
        return out;
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(r, Eigen::ComputeFullU);
    const int rank = count_above(svd.singularValues(), r.rows(), r.cols(), rel_tol);
    for (Eigen::Index i = rank; i < r.rows(); ++i) out.emplace_back(svd.matrixU().col(i));
    return out;
}

std::vector<Eigen::VectorXd> mechanism_basis(const Framework& fw, double rel_tol) {
    const NumericResult res = numeric_analysis(fw, rel_tol);
    std::vector<Eigen::VectorXd> out;
    for (Eigen::Index i = 0; i < res.mechanisms.cols(); ++i) out.emplace_back(res.mechanisms.col(i));
    return out;
}

double equilibrium_residual(const Framework& fw, const StressVector& w) {
    if (w.size() != fw.edge_count()) throw DimensionMismatch("stress vector has the wrong length");
    const Eigen::MatrixXd r = analysis_matrix(fw);
    if (r.cols() == 0) return 0.0;
    return (r.transpose() * w).lpNorm<Eigen::Infinity>();
}

int IrrepDimensions::operator[](const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return dimensions[i];
    return 0;
}

int IrrepDimensions::total() const {
    int t = 0;
    for (int d : dimensions) t += d;
    return t;
}

namespace {

// M(g) applied to the columns of x.
Eigen::MatrixXd act(const Framework& fw, const PointGroup& group, const GroupAction& action, int g,
                    const Eigen::MatrixXd& x, Space space) {
    Eigen::MatrixXd y(x.rows(), x.cols());
    if (space == Space::edges) {
        const auto& pe = action.edge[static_cast<std::size_t>(g)];
        for (Eigen::Index b = 0; b < x.rows(); ++b) y.row(pe[static_cast<std::size_t>(b)]) = x.row(b);
        return y;
    }
    const auto& pv = action.vertex[static_cast<std::size_t>(g)];
    const Eigen::Matrix2d t = group.element(g).matrix();
    for (int i = 0; i < fw.vertex_count(); ++i) {
        const int fi = fw.free_index(i);
        if (fi < 0) continue;
        const int fj = fw.free_index(pv[static_cast<std::size_t>(i)]);
        y.middleRows(2 * fj, 2) = t * x.middleRows(2 * fi, 2);
    }
    return y;
}

Eigen::Index space_dim(const Framework& fw, Space space) {
    return space == Space::edges ? fw.edge_count() : 2 * fw.internal_count();
}

}  // namespace

IrrepDimensions classify_by_irrep(const Framework& fw, const PointGroup& group, const GroupAction& action,
                                  const Eigen::MatrixXd& basis, Space space) {
    if (basis.rows() != space_dim(fw, space))
        throw DimensionMismatch("basis has " + std::to_string(basis.rows()) + " rows, expected " +
                                std::to_string(space_dim(fw, space)));
    const CharacterTable table = character_table(group);
    IrrepDimensions out;
    const Eigen::Index b = basis.cols();
    const int order = group.order();

    std::vector<Eigen::MatrixXd> images;
    images.reserve(static_cast<std::size_t>(order));
    for (int g = 0; g < order; ++g) images.push_back(act(fw, group, action, g, basis, space));

    for (const auto& irrep : table.irreps) {
        out.labels.push_back(irrep.label);
        if (b == 0) {
            out.dimensions.push_back(0);
            continue;
        }
        Eigen::MatrixXcd proj = Eigen::MatrixXcd::Zero(basis.rows(), b);
        for (int g = 0; g < order; ++g)
            proj += std::conj(irrep.character[static_cast<std::size_t>(group.class_of(g))]) *
                    images[static_cast<std::size_t>(g)].cast<Complex>();
        proj *= static_cast<double>(irrep.dimension) / order;
        const Eigen::MatrixXcd gram = basis.cast<Complex>().adjoint() * proj;

        Eigen::JacobiSVD<Eigen::MatrixXcd> svd(gram);
        int rank = 0;
        for (Eigen::Index i = 0; i < svd.singularValues().size(); ++i)
            if (svd.singularValues()(i) > 0.5) ++rank;
        const double trace_gap = std::abs(gram.trace() - Complex(rank));
        const double leak = (proj - basis.cast<Complex>() * gram).lpNorm<Eigen::Infinity>();
        if (trace_gap > 1e-6 || leak > 1e-6)
            throw DimensionMismatch("span is not invariant under " + group.name() + " (irrep " + irrep.label +
                                    ": trace gap " + fmt(trace_gap) + ", leak " + fmt(leak) + ")");
        out.dimensions.push_back(rank);
    }
    if (out.total() != b)
        throw DimensionMismatch("irrep dimensions sum to " + std::to_string(out.total()) + ", basis has " +
                                std::to_string(b) + " vectors");
    return out;
}

IrrepDimensions classify_by_irrep(const Framework& fw, const PointGroup& group, const Eigen::MatrixXd& basis,
                                  Space space, double tol) {
    return classify_by_irrep(fw, group, group_action(fw, group, tol), basis, space);
}

double intertwining_residual(const Framework& fw, const PointGroup& group, const GroupAction& action,
                             const Eigen::MatrixXd& r) {
    const double scale = r.size() > 0 ? r.lpNorm<Eigen::Infinity>() : 0.0;
    if (scale == 0.0) return 0.0;
    double worst = 0.0;
    Eigen::MatrixXd y(r.rows(), r.cols()), z(r.rows(), r.cols());
    for (int g = 0; g < group.order(); ++g) {
        const auto& pv = action.vertex[static_cast<std::size_t>(g)];
        const auto& pe = action.edge[static_cast<std::size_t>(g)];
        const Eigen::Matrix2d t = group.element(g).matrix();
        for (int i = 0; i < fw.vertex_count(); ++i) {
            const int fi = fw.free_index(i);
            if (fi < 0) continue;
            const int fj = fw.free_index(pv[static_cast<std::size_t>(i)]);
            y.middleCols(2 * fi, 2) = r.middleCols(2 * fj, 2) * t;
        }
        for (Eigen::Index b = 0; b < r.rows(); ++b) z.row(b) = y.row(pe[static_cast<std::size_t>(b)]);
        worst = std::max(worst, (r - z).lpNorm<Eigen::Infinity>());
    }
    return worst / scale;
}

double resolution_of_identity_residual(const Framework& fw, const PointGroup& group, const GroupAction& action) {
    const CharacterTable table = character_table(group);
    const int order = group.order();
    // sum_i Pi_i = sum_g c_g M(g) with c_g = (1/|G|) sum_i d_i conj(chi_i(g)).
    std::vector<Complex> c(static_cast<std::size_t>(order));
    for (int g = 0; g < order; ++g) {
        Complex sum = 0.0;
        for (const auto& irrep : table.irreps)
            sum += static_cast<double>(irrep.dimension) *
                   std::conj(irrep.character[static_cast<std::size_t>(group.class_of(g))]);
        c[static_cast<std::size_t>(g)] = sum / static_cast<double>(order);
    }

    double worst = 0.0;
    for (Space space : {Space::edges, Space::velocities}) {
        const Eigen::Index n = space_dim(fw, space);
        if (n == 0) continue;
        Eigen::MatrixXcd sum = Eigen::MatrixXcd::Zero(n, n);
        for (int g = 0; g < order; ++g) {
            const Complex cg = c[static_cast<std::size_t>(g)];
            if (space == Space::edges) {
                const auto& pe = action.edge[static_cast<std::size_t>(g)];
                for (Eigen::Index b = 0; b < n; ++b) sum(pe[static_cast<std::size_t>(b)], b) += cg;
            } else {
                const auto& pv = action.vertex[static_cast<std::size_t>(g)];
                const Eigen::Matrix2d t = group.element(g).matrix();
                for (int i = 0; i < fw.vertex_count(); ++i) {
                    const int fi = fw.free_index(i);
                    if (fi < 0) continue;
                    const int fj = fw.free_index(pv[static_cast<std::size_t>(i)]);
                    sum.block(2 * fj, 2 * fi, 2, 2) += cg * t.cast<Complex>();
                }
            }
        }
        sum -= Eigen::MatrixXcd::Identity(n, n);
        worst = std::max(worst, sum.cwiseAbs().maxCoeff());
    }
    return worst;
}

bool VerificationReport::passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const VerificationCheck& c) { return c.passed; });
}

VerificationReport verify(const Framework& fw, const PointGroup& group, const VerifyOptions& options) {
    const GroupAction action = group_action(fw, group, options.sym_tol);
    const AnalysisReport symbolic = analyze(fw, group, options.sym_tol);
    const NumericResult num = numeric_analysis(fw, options.rank_tol);

    VerificationReport rep;
    rep.group_name = group.name();
    rep.k = symbolic.k;
    rep.rank = num.rank;
    rep.s = num.s;
    rep.m = num.m;
    rep.surplus = num.s - std::max(0, -num.k);

    rep.intertwining = intertwining_residual(fw, group, action, analysis_matrix(fw));
    rep.checks.push_back({"intertwining", rep.intertwining <= options.residual_tol,
                          "max relative residual " + fmt(rep.intertwining)});

    rep.identity = resolution_of_identity_residual(fw, group, action);
    rep.checks.push_back(
        {"resolution of identity", rep.identity <= options.residual_tol, "max residual " + fmt(rep.identity)});

    const bool counts_ok = num.m >= 0 && num.s >= 0 && num.m - num.s == symbolic.k;
    rep.checks.push_back({"m - s = k", counts_ok,
                          "m=" + std::to_string(num.m) + ", s=" + std::to_string(num.s) +
                              ", k=" + std::to_string(symbolic.k)});

    IrrepDimensions s_dims, m_dims, t_dims;
    try {
        if (num.m < 0) throw DimensionMismatch("negative mechanism count");
        s_dims = classify_by_irrep(fw, group, action, num.self_stresses, Space::edges);
        m_dims = classify_by_irrep(fw, group, action, num.mechanisms, Space::velocities);
        if (!fw.is_pinned())
            t_dims = classify_by_irrep(fw, group, action, trivial_motion_basis(fw, group.center()), Space::velocities);
    } catch (const Error& e) {
        rep.checks.push_back({"classification", false, e.what()});
        return rep;
    }

    bool per_irrep = true, lower_bound = true;
    std::string per_detail, bound_detail;
    for (std::size_t i = 0; i < symbolic.irreps.size(); ++i) {
        const auto& sym = symbolic.irreps[i];
        IrrepVerification iv;
        iv.label = sym.label;
        iv.dimension = sym.dimension;
        iv.gamma = sym.gamma;
        iv.s = s_dims.dimensions[i];
        iv.m = m_dims.dimensions[i];
        iv.trivial = t_dims.labels.empty() ? 0 : t_dims.dimensions[i];
        iv.detected_s = sym.detected_s;
        if (iv.m - iv.s != iv.dimension * iv.gamma) {
            per_irrep = false;
            per_detail += (per_detail.empty() ? "" : "; ") + iv.label + ": m-s=" + std::to_string(iv.m - iv.s) +
                          ", d*gamma=" + std::to_string(iv.dimension * iv.gamma);
        }
        if (iv.s < iv.detected_s) {
            lower_bound = false;
            bound_detail += (bound_detail.empty() ? "" : "; ") + iv.label + ": s=" + std::to_string(iv.s) +
                            " < " + std::to_string(iv.detected_s);
        }
        rep.irreps.push_back(iv);
    }
    rep.checks.push_back({"per-irrep m_i - s_i = d_i gamma_i", per_irrep, per_irrep ? "all irreps" : per_detail});
    rep.checks.push_back({"s_i >= detected lower bound", lower_bound,
                          lower_bound ? "surplus " + std::to_string(rep.surplus) : bound_detail});

    if (group.family() == Family::Cn && group.n() >= 3) {
        bool paired = true;
        const int n = group.n();
        for (int t = 1; t < n; ++t) {
            const auto& a = rep.irreps[static_cast<std::size_t>(t)];
            const auto& b = rep.irreps[static_cast<std::size_t>(n - t)];
            if (a.s != b.s || a.m != b.m) paired = false;
        }
        rep.checks.push_back({"conjugate pairs", paired, paired ? "s_t = s_{n-t}, m_t = m_{n-t}" : "unequal"});
    }
    return rep;
}

}  // namespace symstress
