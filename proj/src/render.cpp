#include "symstress/render.hpp"

#include "symstress/errors.hpp"
#include "symstress/io.hpp"

#include <algorithm>
#include <cmath>

namespace symstress {

void RenderSpec::validate() const {
    if (width <= 0 || height <= 0) throw DomainError("canvas size must be positive");
    if (margin < 0 || 2 * margin >= width || 2 * margin >= height) throw DomainError("margin leaves no drawing area");
    if (joint_radius <= 0.0 || bar_width <= 0.0 || stress_width <= 0.0) throw DomainError("stroke sizes must be positive");
}

Eigen::VectorXd normalize_stress(const Eigen::VectorXd& w) {
    if (w.size() == 0) return w;
    const double peak = w.cwiseAbs().maxCoeff();
    if (peak == 0.0) return w;
    Eigen::Index at = 0;
    for (Eigen::Index i = 0; i < w.size(); ++i)
        if (std::abs(w(i)) >= peak * (1.0 - 1e-9)) {
            at = i;
            break;
        }
    return w / w(at);
}

namespace {

std::string num(double x) { return format_fixed(x, 2); }

}  // namespace

std::string render_svg(const Framework& fw, const std::optional<PointGroup>& group, const RenderSpec& spec,
                       const std::optional<Eigen::VectorXd>& stress, double tol) {
    spec.validate();
    if (stress && stress->size() != fw.edge_count())
        throw DimensionMismatch("stress has " + std::to_string(stress->size()) + " entries, framework has " +
                                std::to_string(fw.edge_count()) + " bars");

    double xmin = 0.0, xmax = 0.0, ymin = 0.0, ymax = 0.0;
    if (fw.vertex_count() > 0) {
        xmin = xmax = fw.position(0).x;
        ymin = ymax = fw.position(0).y;
        for (const auto& p : fw.positions()) {
            xmin = std::min(xmin, p.x);
            xmax = std::max(xmax, p.x);
            ymin = std::min(ymin, p.y);
            ymax = std::max(ymax, p.y);
        }
    }
    const double span_x = std::max(xmax - xmin, 1e-12), span_y = std::max(ymax - ymin, 1e-12);
    const double avail_x = spec.width - 2.0 * spec.margin, avail_y = spec.height - 2.0 * spec.margin;
    const double scale = std::min(avail_x / span_x, avail_y / span_y);
    const double off_x = spec.margin + 0.5 * (avail_x - scale * (xmax - xmin));
    const double off_y = spec.margin + 0.5 * (avail_y - scale * (ymax - ymin));
    auto sx = [&](double x) { return off_x + scale * (x - xmin); };
    auto sy = [&](double y) { return spec.height - (off_y + scale * (y - ymin)); };

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" + std::to_string(spec.width) +
           "\" height=\"" + std::to_string(spec.height) + "\" viewBox=\"0 0 " + std::to_string(spec.width) + " " +
           std::to_string(spec.height) + "\">\n";
    out += "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

    std::vector<bool> fixed(static_cast<std::size_t>(fw.edge_count()), false);
    if (group) {
        const GroupAction action = group_action(fw, *group, tol);
        for (int g = 1; g < group->order(); ++g)
            for (int k = 0; k < fw.edge_count(); ++k)
                if (action.edge[static_cast<std::size_t>(g)][static_cast<std::size_t>(k)] == k)
                    fixed[static_cast<std::size_t>(k)] = true;

        const Point2 c = group->center();
        const double reach = std::hypot(span_x, span_y) * 0.6 + std::hypot(c.x - 0.5 * (xmin + xmax), c.y - 0.5 * (ymin + ymax));
        if (spec.mirrors) {
            for (const auto& op : group->elements()) {
                if (op.kind != SymmetryOperation::Kind::reflection) continue;
                const double dx = std::cos(op.angle) * reach, dy = std::sin(op.angle) * reach;
                out += "  <line class=\"mirror\" x1=\"" + num(sx(c.x - dx)) + "\" y1=\"" + num(sy(c.y - dy)) +
                       "\" x2=\"" + num(sx(c.x + dx)) + "\" y2=\"" + num(sy(c.y + dy)) +
                       "\" stroke=\"#7f7f7f\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";
            }
        }
        if (spec.center && group->n() > 1) {
            const double r = spec.joint_radius * 1.5;
            out += "  <circle class=\"center\" cx=\"" + num(sx(c.x)) + "\" cy=\"" + num(sy(c.y)) + "\" r=\"" + num(r) +
                   "\" fill=\"none\" stroke=\"#7f7f7f\" stroke-width=\"1\"/>\n";
        }
    }

    std::optional<Eigen::VectorXd> w;
    if (stress) w = normalize_stress(*stress);
    for (int k = 0; k < fw.edge_count(); ++k) {
        const Edge e = fw.graph().edge(k);
        const Point2 a = fw.position(e.a), b = fw.position(e.b);
        std::string cls = "bar";
        std::string color = spec.bar_color;
        double width = spec.bar_width;
        std::string dash;
        if (w) {
            const double v = (*w)(k);
            if (std::abs(v) <= 1e-9) {
                cls += " unstressed";
                color = "#bbbbbb";
                width = 1.0;
                dash = " stroke-dasharray=\"3 3\"";
            } else {
                cls += v > 0 ? " tension" : " compression";
                color = v > 0 ? spec.tension_color : spec.compression_color;
                width = std::max(0.5, spec.stress_width * std::abs(v));
            }
        } else if (spec.unshifted && fixed[static_cast<std::size_t>(k)]) {
            cls += " unshifted";
            color = spec.unshifted_color;
        }
        out += "  <line class=\"" + cls + "\" data-edge=\"" + std::to_string(k) + "\" x1=\"" + num(sx(a.x)) +
               "\" y1=\"" + num(sy(a.y)) + "\" x2=\"" + num(sx(b.x)) + "\" y2=\"" + num(sy(b.y)) + "\" stroke=\"" +
               color + "\" stroke-width=\"" + num(width) + "\" stroke-linecap=\"round\"" + dash + "/>\n";
    }

    for (int i = 0; i < fw.vertex_count(); ++i) {
        const Point2 p = fw.position(i);
        const double r = spec.joint_radius;
        if (fw.pinned(i)) {
            out += "  <rect class=\"joint pinned\" data-vertex=\"" + std::to_string(i) + "\" x=\"" + num(sx(p.x) - r) +
                   "\" y=\"" + num(sy(p.y) - r) + "\" width=\"" + num(2 * r) + "\" height=\"" + num(2 * r) +
                   "\" fill=\"#222222\"/>\n";
        } else {
            out += "  <circle class=\"joint\" data-vertex=\"" + std::to_string(i) + "\" cx=\"" + num(sx(p.x)) +
                   "\" cy=\"" + num(sy(p.y)) + "\" r=\"" + num(r) +
                   "\" fill=\"#ffffff\" stroke=\"#222222\" stroke-width=\"1.5\"/>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

}  // namespace symstress
