#include "symstress/symmetry.hpp"

#include "symstress/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace symstress {

namespace {

constexpr double pi = std::numbers::pi;

int mod(int a, int n) { return ((a % n) + n) % n; }

double normalize_mirror_angle(double a) {
    a = std::fmod(a, pi);
    if (a < 0.0) a += pi;
    if (a >= pi) a -= pi;
    return a;
}

}  // namespace

SymmetryOperation SymmetryOperation::rotation(int step, int order) {
    if (order < 1) throw DomainError("rotation order must be positive");
    SymmetryOperation op;
    op.order = order;
    op.step = mod(step, order);
    op.kind = op.step == 0 ? Kind::identity : Kind::rotation;
    if (op.kind == Kind::identity) op.order = 1;
    return op;
}

SymmetryOperation SymmetryOperation::reflection(double angle) {
    SymmetryOperation op;
    op.kind = Kind::reflection;
    op.angle = normalize_mirror_angle(angle);
    return op;
}

double SymmetryOperation::rotation_angle() const {
    return kind == Kind::rotation ? 2.0 * pi * step / order : 0.0;
}

Eigen::Matrix2d SymmetryOperation::matrix() const {
    Eigen::Matrix2d m;
    switch (kind) {
    case Kind::identity:
        m.setIdentity();
        break;
    case Kind::rotation: {
        const double c = std::cos(rotation_angle()), s = std::sin(rotation_angle());
        m << c, -s, s, c;
        break;
    }
    case Kind::reflection: {
        const double c = std::cos(2.0 * angle), s = std::sin(2.0 * angle);
        m << c, s, s, -c;
        break;
    }
    }
    return m;
}

std::string SymmetryOperation::name() const {
    std::ostringstream out;
    out.imbue(std::locale::classic());
    switch (kind) {
    case Kind::identity:
        out << "E";
        break;
    case Kind::rotation:
        if (is_half_turn())
            out << "C2";
        else if (step == 1)
            out << 'C' << order;
        else
            out << 'C' << order << '^' << step;
        break;
    case Kind::reflection:
        out << "σ(" << angle * 180.0 / pi << ")";
        break;
    }
    return out.str();
}

Point2 apply_op(const SymmetryOperation& op, Point2 p) {
    const Eigen::Matrix2d m = op.matrix();
    return {m(0, 0) * p.x + m(0, 1) * p.y, m(1, 0) * p.x + m(1, 1) * p.y};
}

PointGroup::PointGroup(Family family, int n, double mirror_ref_angle, Point2 center)
    : family_(family), n_(n), mirror_ref_angle_(0.0), center_(center) {
    if (n < 1) throw DomainError("point group order n must be at least 1");
    if (family_ == Family::Cnv) {
        // Any angle congruent mod pi/n describes the same mirror set; keep it in [0, pi/n).
        const double period = pi / n;
        double a = std::fmod(mirror_ref_angle, period);
        if (a < 0.0) a += period;
        if (a > period - 1e-12) a = 0.0;
        mirror_ref_angle_ = a;
    }

    for (int j = 0; j < n_; ++j) elements_.push_back(SymmetryOperation::rotation(j, n_));
    if (family_ == Family::Cnv)
        for (int k = 0; k < n_; ++k)
            elements_.push_back(SymmetryOperation::reflection(mirror_ref_angle_ + k * pi / n_));

    // Multiplication via the index algebra: R_a R_b = R_{a+b}, R_a s_k = s_{k+a},
    // s_k R_b = s_{k-b}, s_k s_l = R_{k-l} (mirror k sits at theta0 + k*pi/n).
    const int g = order();
    table_.resize(static_cast<std::size_t>(g * g));
    for (int a = 0; a < g; ++a) {
        for (int b = 0; b < g; ++b) {
            const bool ma = a >= n_, mb = b >= n_;
            const int ia = ma ? a - n_ : a, ib = mb ? b - n_ : b;
            int r;
            if (!ma && !mb) r = mod(ia + ib, n_);
            else if (!ma && mb) r = n_ + mod(ib + ia, n_);
            else if (ma && !mb) r = n_ + mod(ia - ib, n_);
            else r = mod(ia - ib, n_);
            table_[static_cast<std::size_t>(a * g + b)] = r;
        }
    }

    class_of_.assign(static_cast<std::size_t>(g), -1);
    auto add_class = [&](std::string label, std::vector<int> members) {
        for (int m : members) class_of_[static_cast<std::size_t>(m)] = static_cast<int>(classes_.size());
        classes_.push_back({std::move(label), std::move(members)});
    };

    add_class("E", {0});
    if (family_ == Family::Cn) {
        for (int j = 1; j < n_; ++j) add_class(elements_[static_cast<std::size_t>(j)].name(), {j});
        return;
    }

    for (int j = 1; 2 * j < n_; ++j) {
        std::string label = "2C" + std::to_string(n_);
        if (j > 1) label += "^" + std::to_string(j);
        add_class(label, {j, n_ - j});
    }
    if (n_ % 2 == 0) add_class("C2", {n_ / 2});

    if (n_ % 2 == 1) {
        std::vector<int> mirrors;
        for (int k = 0; k < n_; ++k) mirrors.push_back(n_ + k);
        add_class(n_ == 1 ? "σ" : std::to_string(n_) + "σv", mirrors);
        return;
    }
    std::vector<int> ref, other;
    for (int k = 0; k < n_; ++k) (k % 2 == 0 ? ref : other).push_back(n_ + k);
    if (n_ == 2) {
        const bool vertical = std::abs(mirror_ref_angle_ - pi / 2) < 1e-9;
        add_class(vertical ? "σv" : "σh", ref);
        add_class(vertical ? "σh" : "σv", other);
    } else {
        const std::string count = std::to_string(n_ / 2);
        add_class(count + "σv", ref);
        add_class(count + "σd", other);
    }
}

int PointGroup::inverse(int a) const {
    if (a >= n_) return a;
    return mod(-a, n_);
}

std::string PointGroup::name() const {
    if (family_ == Family::Cn) return "C" + std::to_string(n_);
    if (n_ == 1) return "Cs";
    return "C" + std::to_string(n_) + "v";
}

std::vector<int> PointGroup::mirror_classes() const {
    std::vector<int> out;
    for (int c = 0; c < class_count(); ++c)
        if (element(classes_[static_cast<std::size_t>(c)].representative()).kind ==
            SymmetryOperation::Kind::reflection)
            out.push_back(c);
    return out;
}

int PointGroup::half_turn_class() const {
    if (n_ % 2 != 0) return -1;
    return class_of(n_ / 2);
}

PointGroup PointGroup::centred_at(Point2 c) const { return PointGroup(family_, n_, mirror_ref_angle_, c); }

PointGroup group_elements(Family family, int n, double mirror_ref_angle) {
    return PointGroup(family, n, mirror_ref_angle);
}

namespace {

// Joints sorted by x for tolerance lookups.
class PointIndex {
public:
    explicit PointIndex(const std::vector<Point2>& pts) : pts_(pts) {
        order_.resize(pts.size());
        for (std::size_t i = 0; i < pts.size(); ++i) order_[i] = static_cast<int>(i);
        std::sort(order_.begin(), order_.end(),
                  [&](int a, int b) { return pts_[static_cast<std::size_t>(a)].x < pts_[static_cast<std::size_t>(b)].x; });
    }

    // Closest point within eps, or -1.
    int find(Point2 q, double eps) const {
        auto lo = std::lower_bound(order_.begin(), order_.end(), q.x - eps,
                                   [&](int i, double x) { return pts_[static_cast<std::size_t>(i)].x < x; });
        int best = -1;
        double best_d = eps;
        for (auto it = lo; it != order_.end() && pts_[static_cast<std::size_t>(*it)].x <= q.x + eps; ++it) {
            const Point2 d = pts_[static_cast<std::size_t>(*it)] - q;
            const double dist = std::hypot(d.x, d.y);
            if (dist <= best_d) {
                best_d = dist;
                best = *it;
            }
        }
        return best;
    }

private:
    const std::vector<Point2>& pts_;
    std::vector<int> order_;
};

// Returns an empty vector and sets `why` on failure.
std::vector<int> try_vertex_permutation(const Framework& fw, const PointIndex& index,
                                        const SymmetryOperation& op, double tol, Point2 center,
                                        std::string& why) {
    const int v = fw.vertex_count();
    const double eps = tol * fw.scale();
    std::vector<int> perm(static_cast<std::size_t>(v), -1);
    std::vector<bool> hit(static_cast<std::size_t>(v), false);
    for (int i = 0; i < v; ++i) {
        const Point2 q = center + apply_op(op, fw.position(i) - center);
        const int j = index.find(q, eps);
        if (j < 0 || hit[static_cast<std::size_t>(j)]) {
            why = op.name() + " maps vertex " + std::to_string(i) + " to no vertex";
            return {};
        }
        if (fw.pinned(i) != fw.pinned(j)) {
            why = op.name() + " maps vertex " + std::to_string(i) + " onto vertex " + std::to_string(j) +
                  " of different pinning";
            return {};
        }
        hit[static_cast<std::size_t>(j)] = true;
        perm[static_cast<std::size_t>(i)] = j;
    }
    for (int k = 0; k < fw.edge_count(); ++k) {
        const Edge e = fw.graph().edge(k);
        if (fw.graph().find_edge(perm[static_cast<std::size_t>(e.a)], perm[static_cast<std::size_t>(e.b)]) < 0) {
            why = op.name() + " maps edge " + std::to_string(k) + " to no edge";
            return {};
        }
    }
    return perm;
}

}  // namespace

std::vector<int> vertex_permutation(const Framework& fw, const SymmetryOperation& op, double tol, Point2 center) {
    const PointIndex index(fw.positions());
    std::string why;
    auto perm = try_vertex_permutation(fw, index, op, tol, center, why);
    if (perm.empty() && fw.vertex_count() > 0) throw NotSymmetric(why);
    return perm;
}

std::vector<int> edge_permutation(const Framework& fw, const std::vector<int>& vertex_perm) {
    if (static_cast<int>(vertex_perm.size()) != fw.vertex_count())
        throw DimensionMismatch("vertex permutation has the wrong length");
    std::vector<int> out(static_cast<std::size_t>(fw.edge_count()));
    for (int k = 0; k < fw.edge_count(); ++k) {
        const Edge e = fw.graph().edge(k);
        const int img = fw.graph().find_edge(vertex_perm[static_cast<std::size_t>(e.a)],
                                             vertex_perm[static_cast<std::size_t>(e.b)]);
        if (img < 0) throw NotSymmetric("edge " + std::to_string(k) + " has no image");
        out[static_cast<std::size_t>(k)] = img;
    }
    return out;
}

std::vector<int> edge_permutation(const Framework& fw, const SymmetryOperation& op, double tol, Point2 center) {
    return edge_permutation(fw, vertex_permutation(fw, op, tol, center));
}

GroupAction group_action(const Framework& fw, const PointGroup& group, double tol) {
    const PointIndex index(fw.positions());
    GroupAction action;
    for (const auto& op : group.elements()) {
        std::string why;
        auto perm = try_vertex_permutation(fw, index, op, tol, group.center(), why);
        if (perm.empty() && fw.vertex_count() > 0) throw NotSymmetric(why);
        action.edge.push_back(edge_permutation(fw, perm));
        action.vertex.push_back(std::move(perm));
    }
    return action;
}

namespace {

void fill_aliases(SymmetryCensus& c, const PointGroup& group) {
    c.v_c = 0;
    c.e_2 = 0;
    c.e_sigma.clear();
    c.v_sigma.clear();
    if (group.n() > 1) c.v_c = c.classes[1].unshifted_vertices;
    if (const int h = group.half_turn_class(); h >= 0)
        c.e_2 = c.classes[static_cast<std::size_t>(h)].unshifted_edges;
    for (int m : group.mirror_classes()) {
        c.e_sigma.push_back(c.classes[static_cast<std::size_t>(m)].unshifted_edges);
        c.v_sigma.push_back(c.classes[static_cast<std::size_t>(m)].unshifted_vertices);
    }
}

}  // namespace

SymmetryCensus census(const Framework& fw, const PointGroup& group, double tol) {
    const GroupAction action = group_action(fw, group, tol);
    SymmetryCensus c;
    c.pinned = fw.is_pinned();
    c.v = fw.internal_count();
    c.e = fw.edge_count();
    for (const auto& cls : group.classes()) {
        ClassCensus cc;
        cc.label = cls.label;
        cc.size = cls.size();
        bool first = true;
        for (int g : cls.members) {
            const auto& vp = action.vertex[static_cast<std::size_t>(g)];
            const auto& ep = action.edge[static_cast<std::size_t>(g)];
            int fv = 0, fe = 0;
            for (int i = 0; i < fw.vertex_count(); ++i)
                if (vp[static_cast<std::size_t>(i)] == i && !fw.pinned(i)) ++fv;
            for (int k = 0; k < fw.edge_count(); ++k)
                if (ep[static_cast<std::size_t>(k)] == k) ++fe;
            if (first) {
                cc.unshifted_vertices = fv;
                cc.unshifted_edges = fe;
                first = false;
            } else if (fv != cc.unshifted_vertices || fe != cc.unshifted_edges) {
                throw ClassMismatch("operations of class " + cls.label + " fix different numbers of " +
                                    (fv != cc.unshifted_vertices ? "vertices" : "edges"));
            }
        }
        c.classes.push_back(cc);
    }
    fill_aliases(c, group);
    return c;
}

SymmetryCensus make_census(const PointGroup& group, int v, int e, int v_c, int e_2,
                           std::vector<int> mirror_edges, std::vector<int> mirror_vertices, bool pinned) {
    const auto mirrors = group.mirror_classes();
    if (mirror_vertices.empty()) mirror_vertices.assign(mirrors.size(), v_c);
    if (mirror_edges.size() != mirrors.size() || mirror_vertices.size() != mirrors.size())
        throw DimensionMismatch("expected " + std::to_string(mirrors.size()) + " mirror-class counts");

    SymmetryCensus c;
    c.v = v;
    c.e = e;
    c.pinned = pinned;
    std::size_t next_mirror = 0;
    for (int ci = 0; ci < group.class_count(); ++ci) {
        const auto& cls = group.classes()[static_cast<std::size_t>(ci)];
        ClassCensus cc{cls.label, cls.size(), 0, 0};
        const auto& op = group.element(cls.representative());
        switch (op.kind) {
        case SymmetryOperation::Kind::identity:
            cc.unshifted_vertices = v;
            cc.unshifted_edges = e;
            break;
        case SymmetryOperation::Kind::rotation:
            cc.unshifted_vertices = v_c;
            cc.unshifted_edges = op.is_half_turn() ? e_2 : 0;
            break;
        case SymmetryOperation::Kind::reflection:
            cc.unshifted_vertices = mirror_vertices[next_mirror];
            cc.unshifted_edges = mirror_edges[next_mirror];
            ++next_mirror;
            break;
        }
        c.classes.push_back(cc);
    }
    fill_aliases(c, group);
    return c;
}

namespace {

double snap_angle(double a) {
    const double deg = a * 180.0 / pi;
    const double r = std::round(deg);
    if (std::abs(deg - r) < 1e-7) return r * pi / 180.0;
    return a;
}

bool realizes(const Framework& fw, const PointGroup& g, double tol) {
    try {
        census(fw, g, tol);
        return true;
    } catch (const NotSymmetric&) {
        return false;
    } catch (const ClassMismatch&) {
        return false;
    }
}

}  // namespace

std::vector<PointGroup> detect_groups(const Framework& fw, double tol) {
    const int v = fw.vertex_count();
    Point2 c{};
    for (const auto& p : fw.positions()) c = c + p;
    if (v > 0) c = (1.0 / v) * c;
    const double eps = tol * fw.scale();
    // Round the centroid to a binary grid far below the tolerance so exact centres stay exact.
    const double grid = std::ldexp(fw.scale(), -40);
    c = {std::round(c.x / grid) * grid, std::round(c.y / grid) * grid};

    const PointIndex index(fw.positions());
    std::string why;

    int max_rot = 1;
    for (int n = 2; n <= v; ++n) {
        if (v % n != 0 && (v - 1) % n != 0) continue;
        if (!try_vertex_permutation(fw, index, SymmetryOperation::rotation(1, n), tol, c, why).empty()) max_rot = n;
    }

    // Mirror candidates: a mirror through c sends the farthest joint to a joint at
    // the same radius, so its direction bisects the two joint directions.
    std::vector<double> mirrors;
    if (v > 0) {
        int ref = 0;
        double rmax = -1.0;
        for (int i = 0; i < v; ++i) {
            const Point2 d = fw.position(i) - c;
            if (std::hypot(d.x, d.y) > rmax) {
                rmax = std::hypot(d.x, d.y);
                ref = i;
            }
        }
        const Point2 dr = fw.position(ref) - c;
        const double th_ref = std::atan2(dr.y, dr.x);
        for (int j = 0; j < v; ++j) {
            const Point2 d = fw.position(j) - c;
            if (std::abs(std::hypot(d.x, d.y) - rmax) > eps) continue;
            const double angle = snap_angle(normalize_mirror_angle(0.5 * (th_ref + std::atan2(d.y, d.x))));
            const bool seen = std::any_of(mirrors.begin(), mirrors.end(), [&](double m) {
                const double diff = std::abs(m - angle);
                return std::min(diff, pi - diff) < 1e-9;
            });
            if (seen) continue;
            if (!try_vertex_permutation(fw, index, SymmetryOperation::reflection(angle), tol, c, why).empty())
                mirrors.push_back(angle);
        }
    }
    std::sort(mirrors.begin(), mirrors.end());

    std::vector<PointGroup> out;
    for (int n = max_rot; n >= 1; --n) {
        if (max_rot % n != 0) continue;
        std::vector<double> refs;
        for (double m : mirrors) {
            PointGroup candidate(Family::Cnv, n, m, c);
            const double a = snap_angle(candidate.mirror_ref_angle());
            const bool seen = std::any_of(refs.begin(), refs.end(), [&](double r) { return std::abs(r - a) < 1e-9; });
            if (seen) continue;
            refs.push_back(a);
            PointGroup g(Family::Cnv, n, a, c);
            if (realizes(fw, g, tol)) out.push_back(g);
        }
        PointGroup g(Family::Cn, n, 0.0, c);
        if (n == 1 || realizes(fw, g, tol)) out.push_back(g);
    }
    std::stable_sort(out.begin(), out.end(), [](const PointGroup& a, const PointGroup& b) {
        if (a.order() != b.order()) return a.order() > b.order();
        return a.family() == Family::Cnv && b.family() == Family::Cn;
    });
    return out;
}

}  // namespace symstress
