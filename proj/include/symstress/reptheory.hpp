#pragma once

#include "symstress/symmetry.hpp"

#include <complex>
#include <string>
#include <vector>

namespace symstress {

using Complex = std::complex<double>;

/// Class function: one value per conjugacy class, canonical class order.
struct Character {
    std::vector<Complex> values;

    std::size_t size() const { return values.size(); }
    const Complex& operator[](std::size_t i) const { return values[i]; }
    Complex& operator[](std::size_t i) { return values[i]; }
    bool is_real(double tol = 1e-9) const;
};

struct Irrep {
    std::string label;   // Mulliken label
    int dimension = 1;
    Character character;
    /// Index of the complex-conjugate irrep (itself when the character is real).
    int conjugate = 0;
};

struct CharacterTable {
    std::string group_name;
    std::vector<std::string> class_labels;
    std::vector<int> class_sizes;
    std::vector<Irrep> irreps;

    int order() const;
    /// Index of an irrep by label; -1 if absent.
    int find(const std::string& label) const;
};

CharacterTable character_table(const PointGroup& group);

/// Gamma(m) - Gamma(s) evaluated per class from the census counts.
Character reducible_character(const SymmetryCensus& census, const PointGroup& group, bool pinned);
inline Character reducible_character(const SymmetryCensus& census, const PointGroup& group) {
    return reducible_character(census, group, census.pinned);
}

/// Signed integer multiplicity per irrep, in table order.
struct IrrepDecomposition {
    std::vector<std::string> labels;
    std::vector<int> dimensions;
    std::vector<int> coefficients;

    int size() const { return static_cast<int>(coefficients.size()); }
    /// Coefficient of a label (0 when the label is absent).
    int operator[](const std::string& label) const;
    /// Sum of d_i * gamma_i.
    int weighted_sum() const;
    /// e.g. "-5A1 + 2A2 - B1 - B2 - 2E"; "0" when every coefficient vanishes.
    std::string to_string() const;

    friend bool operator==(const IrrepDecomposition&, const IrrepDecomposition&) = default;
};

/// Decomposition template for a table with every coefficient zero.
IrrepDecomposition empty_decomposition(const CharacterTable& table);

/// Inner-product reduction. Throws NonIntegerMultiplicity when a coefficient is
/// not a real integer within `tol`.
IrrepDecomposition reduce(const Character& ch, const CharacterTable& table, double tol = 1e-9);

/// Sum of the character rows weighted by the coefficients.
Character reconstruct(const IrrepDecomposition& dec, const CharacterTable& table);

/// sum_{j=0}^{n-1} eps^{tj} cos(2 pi j / n), eps = exp(2 pi i / n). Requires n >= 3, 1 <= t <= n-1.
Complex trig_sum(int n, int t);

}  // namespace symstress
