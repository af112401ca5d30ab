#pragma once

#include "symstress/framework.hpp"
#include "symstress/symmetry.hpp"

#include <Eigen/Dense>

#include <optional>
#include <string>

namespace symstress {

struct RenderSpec {
    int width = 640;    // pixels
    int height = 640;
    int margin = 32;
    double joint_radius = 4.0;
    double bar_width = 2.0;
    double stress_width = 8.0;   // width of the most stressed bar
    std::string bar_color = "#222222";
    std::string unshifted_color = "#d62728";
    std::string tension_color = "#1f4e9c";
    std::string compression_color = "#8b1a1a";
    bool mirrors = true;
    bool center = true;
    bool unshifted = true;

    /// Throws DomainError for non-positive sizes or a margin that leaves no drawing area.
    void validate() const;
};

/// Deterministic SVG 1.1 drawing. With a group, mirror lines are dashed and
/// bars fixed by a non-identity operation get the unshifted colour. A stress
/// (one value per bar) replaces the bar styling: width proportional to |w|,
/// colour by sign after scaling the largest entry to +1.
std::string render_svg(const Framework& fw, const std::optional<PointGroup>& group, const RenderSpec& spec,
                       const std::optional<Eigen::VectorXd>& stress = std::nullopt,
                       double tol = default_symmetry_tolerance);

/// Stress scaled so that its largest-magnitude entry (lowest index on ties) is +1.
Eigen::VectorXd normalize_stress(const Eigen::VectorXd& w);

}  // namespace symstress
