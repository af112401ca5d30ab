#pragma once

#include "symstress/framework.hpp"
#include "symstress/reptheory.hpp"
#include "symstress/symmetry.hpp"

#include <string>
#include <vector>

namespace symstress {

/// Closed-form Gamma(m) - Gamma(s) for the group families worked out by hand:
/// C1, Cs, C2 (free and pinned), C_n n >= 3 (free), C2v (free and pinned),
/// C3v and C4v (free). Evaluated in integer arithmetic.
///
/// C_n (n >= 3) and C4v formulas assume e_2 = 0 as planarity forces; they are
/// evaluated regardless, so a non-planar census shows up as a disagreement.
///
/// Throws ParityViolation / DivisibilityViolation when a quotient is not an
/// integer, UnsupportedGroup for any other (group, pinning, census) case.
IrrepDecomposition closed_form(const PointGroup& group, int k, const SymmetryCensus& census);

/// True when the group and census fall in the closed-form coverage.
bool closed_form_supported(const PointGroup& group, const SymmetryCensus& census);

enum class CrossCheck { agree, disagree, unsupported };

std::string to_string(CrossCheck c);

/// Compares closed_form with the reduction of the census character.
CrossCheck cross_check(const PointGroup& group, const SymmetryCensus& census, int k);

struct IrrepCount {
    std::string label;
    int dimension = 1;
    int gamma = 0;
    int detected_s = 0;   // max(0, -gamma) * d
    int detected_m = 0;   // max(0, gamma) * d
    std::vector<std::string> annotations;
};

struct MirrorAnnotation {
    std::string mirror_class;
    std::vector<std::string> irreps;   // irreps with character -1 on the class
    int detected_s = 0;
    int detected_m = 0;
};

struct AnalysisReport {
    PointGroup group;
    int k = 0;
    SymmetryCensus census;
    Character character;
    IrrepDecomposition decomposition;
    CrossCheck cross_check = CrossCheck::unsupported;
    std::vector<IrrepCount> irreps;
    int detected_s = 0;
    int detected_m = 0;
    int surplus = 0;   // detected_s - max(0, -k)
    int fully_symmetric_s = 0;
    int fully_symmetric_m = 0;
    std::vector<MirrorAnnotation> mirrors;
    std::vector<std::string> notices;
};

/// Report built from a census alone (no geometry).
AnalysisReport analyze_census(const PointGroup& group, const SymmetryCensus& census);

/// Census, reduction, closed-form cross-check and per-irrep detected counts.
/// Throws CrossCheckFailure when the two evaluations disagree.
AnalysisReport analyze(const Framework& fw, const PointGroup& group, double tol = default_symmetry_tolerance);

}  // namespace symstress
