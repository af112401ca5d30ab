#pragma once

#include "symstress/counting.hpp"
#include "symstress/framework.hpp"
#include "symstress/numeric.hpp"
#include "symstress/symmetry.hpp"

#include <optional>
#include <string>

namespace symstress {

inline constexpr int report_schema_version = 1;

/// Group named by a file or a flag; `automatic` defers to detect_groups.
struct GroupChoice {
    bool automatic = false;
    PointGroup group;
};

struct FrameworkDocument {
    Framework framework;
    std::optional<GroupChoice> group;
};

/// Parses the framework JSON document. Throws ParseError (syntax, schema) or
/// InvalidFramework (graph/geometry invariants).
FrameworkDocument parse_framework(const std::string& text);
FrameworkDocument read_framework(const std::string& path);

/// Canonical document text: one vertex per line, trailing newline.
std::string framework_to_json(const Framework& fw, const std::optional<GroupChoice>& group = std::nullopt);

/// auto | C1 | Cs[:angle_deg] | Cn:<n> | Cnv:<n>[:angle_deg]; "vertical" and
/// "horizontal" stand for 90 and 0. Throws ParseError.
GroupChoice parse_group_flag(const std::string& text);

/// Mirror angle in degrees, snapped to an integer when within 1e-9.
double mirror_angle_degrees(const PointGroup& g);

/// Shortest round-trip decimal text, "." as decimal point; integers keep ".0" off.
std::string format_number(double x);
/// Fixed notation with at most `decimals` digits after the point, trailing zeros removed.
std::string format_fixed(double x, int decimals);

std::string analysis_to_json(const AnalysisReport& report, const std::string& source = {});
std::string analysis_to_text(const AnalysisReport& report, const std::string& source = {});
std::string verification_to_json(const VerificationReport& report, const AnalysisReport& analysis,
                                 const std::string& source = {});
std::string verification_to_text(const VerificationReport& report, const std::string& source = {});

void write_file(const std::string& path, const std::string& contents);

}  // namespace symstress
