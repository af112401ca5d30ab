#include "symstress/counting.hpp"

#include "symstress/errors.hpp"

#include <algorithm>
#include <cmath>

namespace symstress {

namespace {

// Exact quotient; non-integral results are errors naming the offending irrep.
int quotient(long long num, int den, const std::string& what) {
    if (num % den != 0) {
        const std::string msg = what + ": " + std::to_string(num) + "/" + std::to_string(den) + " is not an integer";
        if (den == 2) throw ParityViolation(msg);
        throw DivisibilityViolation(msg);
    }
    return static_cast<int>(num / den);
}

[[noreturn]] void unsupported(const PointGroup& g, bool pinned, const std::string& why = {}) {
    std::string msg = "no closed form for " + std::string(pinned ? "pinned " : "") + g.name();
    if (!why.empty()) msg += " (" + why + ")";
    throw UnsupportedGroup(msg);
}

void set(IrrepDecomposition& d, const std::string& label, int value) {
    for (std::size_t i = 0; i < d.labels.size(); ++i)
        if (d.labels[i] == label) {
            d.coefficients[i] = value;
            return;
        }
    throw UnknownEntry("irrep " + label);
}

IrrepDecomposition cs_form(const PointGroup& g, int k, const SymmetryCensus& c, IrrepDecomposition d) {
    const int es = c.e_sigma.at(0);
    const int shift = c.pinned ? 0 : 1;
    set(d, "A'", quotient(k - es + shift, 2, "A'"));
    set(d, "A''", quotient(k + es - shift, 2, "A''"));
    (void)g;
    return d;
}

IrrepDecomposition c2_form(const PointGroup& g, int k, const SymmetryCensus& c, IrrepDecomposition d) {
    int a = 0, b = 0;   // offsets added to k for A and B
    if (c.v_c == 0 && c.e_2 == 0) {
        a = c.pinned ? 0 : 1;
        b = c.pinned ? 0 : -1;
    } else if (c.v_c == 0 && c.e_2 == 1) {
        a = c.pinned ? -1 : 0;
        b = c.pinned ? 1 : 0;
    } else if (c.v_c == 1 && c.e_2 == 0) {
        a = c.pinned ? -2 : -1;
        b = c.pinned ? 2 : 1;
    } else {
        unsupported(g, c.pinned, "v_c=" + std::to_string(c.v_c) + ", e_2=" + std::to_string(c.e_2));
    }
    set(d, "A", quotient(k + a, 2, "A"));
    set(d, "B", quotient(k + b, 2, "B"));
    return d;
}

IrrepDecomposition cn_form(const PointGroup& g, int k, const SymmetryCensus& c, IrrepDecomposition d) {
    const int n = g.n();
    if (c.pinned) unsupported(g, true);
    // Planarity leaves no bar fixed by a rotation, so e_2 does not enter; a
    // non-planar census with e_2 > 0 then disagrees with the reduction.
    if (c.v_c == 0) {
        const int q = quotient(k + 3, n, "A_t (n must divide k+3)");
        for (int t = 0; t < n; ++t) {
            const bool low = t == 0 || t == 1 || t == n - 1;
            d.coefficients[static_cast<std::size_t>(t)] = low ? q - 1 : q;
        }
    } else if (c.v_c == 1) {
        const int q = quotient(k + 1, n, "A_t (n must divide k+1)");
        for (int t = 0; t < n; ++t) d.coefficients[static_cast<std::size_t>(t)] = t == 0 ? q - 1 : q;
    } else {
        unsupported(g, false, "v_c=" + std::to_string(c.v_c));
    }
    return d;
}

IrrepDecomposition c2v_form(const PointGroup& g, int k, const SymmetryCensus& c, IrrepDecomposition d) {
    const long long h = c.e_sigma.at(0), v = c.e_sigma.at(1);
    // Constant terms for A1, A2, B1, B2 (numerators over 4).
    int k1, k2, k3, k4;
    if (!c.pinned) {
        if (c.v_c == 0 && c.e_2 == 0) k1 = 3, k2 = -1, k3 = -1, k4 = -1;
        else if (c.v_c == 0 && c.e_2 == 1) k1 = 2, k2 = -2, k3 = 0, k4 = 0;
        else if (c.v_c == 1 && c.e_2 == 0) k1 = 1, k2 = -3, k3 = 1, k4 = 1;
        else unsupported(g, false, "v_c=" + std::to_string(c.v_c) + ", e_2=" + std::to_string(c.e_2));
    } else {
        if (c.v_c == 0 && c.e_2 == 0) k1 = 0, k2 = 0, k3 = 0, k4 = 0;
        else if (c.v_c == 0 && c.e_2 == 1) k1 = -1, k2 = -1, k3 = 1, k4 = 1;
        else if (c.v_c == 1 && c.e_2 == 0) k1 = -2, k2 = -2, k3 = 2, k4 = 2;
        else unsupported(g, true, "v_c=" + std::to_string(c.v_c) + ", e_2=" + std::to_string(c.e_2));
    }
    set(d, "A1", quotient(k - h - v + k1, 4, "A1"));
    set(d, "A2", quotient(k + h + v + k2, 4, "A2"));
    set(d, "B1", quotient(k - h + v + k3, 4, "B1"));
    set(d, "B2", quotient(k + h - v + k4, 4, "B2"));
    return d;
}

IrrepDecomposition c3v_form(const PointGroup& g, int k, const SymmetryCensus& c, IrrepDecomposition d) {
    if (c.pinned) unsupported(g, true);
    const long long es = c.e_sigma.at(0);
    if (c.v_c == 0) {
        set(d, "A1", quotient(k - 3 * es + 3, 6, "A1"));
        set(d, "A2", quotient(k + 3 * es - 3, 6, "A2"));
        set(d, "E", quotient(k, 3, "E"));
    } else if (c.v_c == 1) {
        set(d, "A1", quotient(k - 3 * es + 1, 6, "A1"));
        set(d, "A2", quotient(k + 3 * es - 5, 6, "A2"));
        set(d, "E", quotient(k + 1, 3, "E"));
    } else {
        unsupported(g, false, "v_c=" + std::to_string(c.v_c));
    }
    return d;
}

IrrepDecomposition c4v_form(const PointGroup& g, int k, const SymmetryCensus& c, IrrepDecomposition d) {
    if (c.pinned) unsupported(g, true);
    const long long a = c.e_sigma.at(0), b = c.e_sigma.at(1);
    int shift;
    if (c.v_c == 0) shift = 0;
    else if (c.v_c == 1) shift = -2;
    else unsupported(g, false, "v_c=" + std::to_string(c.v_c));
    set(d, "A1", quotient(k - 2 * a - 2 * b + 3 + shift, 8, "A1"));
    set(d, "A2", quotient(k + 2 * a + 2 * b - 5 + shift, 8, "A2"));
    set(d, "B1", quotient(k - 2 * a + 2 * b + 3 + shift, 8, "B1"));
    set(d, "B2", quotient(k + 2 * a - 2 * b + 3 + shift, 8, "B2"));
    set(d, "E", quotient(k - 1 - shift, 4, "E"));
    return d;
}

}  // namespace

IrrepDecomposition closed_form(const PointGroup& group, int k, const SymmetryCensus& census) {
    if (static_cast<int>(census.classes.size()) != group.class_count())
        throw DimensionMismatch("census does not match group " + group.name());
    IrrepDecomposition d = empty_decomposition(character_table(group));
    const int n = group.n();
    if (group.family() == Family::Cn) {
        if (n == 1) {
            set(d, "A", k);
            return d;
        }
        if (n == 2) return c2_form(group, k, census, d);
        return cn_form(group, k, census, d);
    }
    switch (n) {
    case 1: return cs_form(group, k, census, d);
    case 2: return c2v_form(group, k, census, d);
    case 3: return c3v_form(group, k, census, d);
    case 4: return c4v_form(group, k, census, d);
    default: unsupported(group, census.pinned);
    }
}

bool closed_form_supported(const PointGroup& group, const SymmetryCensus& census) {
    try {
        closed_form(group, census.freedom_number(), census);
        return true;
    } catch (const UnsupportedGroup&) {
        return false;
    } catch (const Error&) {
        return true;
    }
}

std::string to_string(CrossCheck c) {
    switch (c) {
    case CrossCheck::agree: return "agree";
    case CrossCheck::disagree: return "disagree";
    case CrossCheck::unsupported: return "unsupported";
    }
    return "unsupported";
}

CrossCheck cross_check(const PointGroup& group, const SymmetryCensus& census, int k) {
    IrrepDecomposition closed;
    try {
        closed = closed_form(group, k, census);
    } catch (const UnsupportedGroup&) {
        return CrossCheck::unsupported;
    } catch (const ParityViolation&) {
        return CrossCheck::disagree;
    } catch (const DivisibilityViolation&) {
        return CrossCheck::disagree;
    }
    try {
        const auto general = reduce(reducible_character(census, group), character_table(group));
        return general == closed ? CrossCheck::agree : CrossCheck::disagree;
    } catch (const NonIntegerMultiplicity&) {
        return CrossCheck::disagree;
    }
}

AnalysisReport analyze_census(const PointGroup& group, const SymmetryCensus& census) {
    AnalysisReport r;
    r.group = group;
    r.census = census;
    r.k = census.freedom_number();
    const CharacterTable table = character_table(group);
    r.character = reducible_character(census, group);
    r.decomposition = reduce(r.character, table);

    const std::string hint = group.n() > 2 && census.e_2 > 0
                                 ? " (the closed form assumes no bar is fixed by the half-turn, i.e. a planar framework)"
                                 : "";
    try {
        const auto closed = closed_form(group, r.k, census);
        if (!(closed == r.decomposition))
            throw CrossCheckFailure("closed form gives " + closed.to_string() + ", reduction gives " +
                                    r.decomposition.to_string() + hint);
        r.cross_check = CrossCheck::agree;
    } catch (const UnsupportedGroup& e) {
        r.cross_check = CrossCheck::unsupported;
        r.notices.push_back(std::string(e.what()) + "; using the general reduction only");
    } catch (const ParityViolation& e) {
        throw CrossCheckFailure(std::string("closed form failed: ") + e.what() + hint);
    } catch (const DivisibilityViolation& e) {
        throw CrossCheckFailure(std::string("closed form failed: ") + e.what() + hint);
    }

    const auto mirror_classes = group.mirror_classes();
    for (int mc : mirror_classes) r.mirrors.push_back({table.class_labels[static_cast<std::size_t>(mc)], {}, 0, 0});

    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        const auto& irrep = table.irreps[i];
        IrrepCount c;
        c.label = irrep.label;
        c.dimension = irrep.dimension;
        c.gamma = r.decomposition.coefficients[i];
        c.detected_s = std::max(0, -c.gamma) * c.dimension;
        c.detected_m = std::max(0, c.gamma) * c.dimension;
        if (i == 0) {
            c.annotations.push_back("fully-symmetric");
            r.fully_symmetric_s = c.detected_s;
            r.fully_symmetric_m = c.detected_m;
        }
        for (std::size_t m = 0; m < mirror_classes.size(); ++m) {
            const Complex chi = irrep.character[static_cast<std::size_t>(mirror_classes[m])];
            if (std::abs(chi - Complex(-1.0)) < 1e-9) {
                c.annotations.push_back("anti-symmetric w.r.t. " + r.mirrors[m].mirror_class);
                r.mirrors[m].irreps.push_back(irrep.label);
                r.mirrors[m].detected_s += c.detected_s;
                r.mirrors[m].detected_m += c.detected_m;
            }
        }
        r.detected_s += c.detected_s;
        r.detected_m += c.detected_m;
        r.irreps.push_back(std::move(c));
    }
    r.surplus = r.detected_s - std::max(0, -r.k);
    return r;
}

AnalysisReport analyze(const Framework& fw, const PointGroup& group, double tol) {
    AnalysisReport r = analyze_census(group, census(fw, group, tol));
    const auto issues = check_planarity(fw);
    if (!issues.empty())
        r.notices.push_back("framework is not planar (" + std::to_string(issues.size()) +
                            " crossing or overlap incidences); closed forms assume planarity");
    return r;
}

}  // namespace symstress
