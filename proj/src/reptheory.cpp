#include "symstress/reptheory.hpp"

#include "symstress/errors.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

namespace symstress {

namespace {

constexpr double pi = std::numbers::pi;

Complex root_of_unity(int n, long long power) {
    const long long p = ((power % n) + n) % n;
    const double a = 2.0 * pi * static_cast<double>(p) / n;
    return {std::cos(a), std::sin(a)};
}

}  // namespace

bool Character::is_real(double tol) const {
    for (const auto& v : values)
        if (std::abs(v.imag()) > tol) return false;
    return true;
}

int CharacterTable::order() const {
    int g = 0;
    for (int s : class_sizes) g += s;
    return g;
}

int CharacterTable::find(const std::string& label) const {
    for (std::size_t i = 0; i < irreps.size(); ++i)
        if (irreps[i].label == label) return static_cast<int>(i);
    return -1;
}

CharacterTable character_table(const PointGroup& group) {
    CharacterTable t;
    t.group_name = group.name();
    for (const auto& c : group.classes()) {
        t.class_labels.push_back(c.label);
        t.class_sizes.push_back(c.size());
    }
    const int n = group.n();
    const auto& classes = group.classes();

    if (group.family() == Family::Cn) {
        // One class per rotation step j; (A_t)_j = eps^{tj}.
        for (int tt = 0; tt < n; ++tt) {
            Irrep r;
            if (n == 1) r.label = "A";
            else if (n == 2) r.label = tt == 0 ? "A" : "B";
            else r.label = "A" + std::to_string(tt);
            r.conjugate = (n - tt) % n;
            for (int j = 0; j < n; ++j) r.character.values.push_back(root_of_unity(n, 1LL * tt * j));
            t.irreps.push_back(std::move(r));
        }
        return t;
    }

    if (n == 1) {
        t.irreps.push_back({"A'", 1, Character{{1.0, 1.0}}, 0});
        t.irreps.push_back({"A''", 1, Character{{1.0, -1.0}}, 1});
        return t;
    }

    const auto mirrors = group.mirror_classes();
    auto row = [&](auto&& value) {
        Character ch;
        for (std::size_t c = 0; c < classes.size(); ++c) {
            const auto& op = group.element(classes[c].representative());
            ch.values.push_back(value(op, static_cast<int>(c)));
        }
        return ch;
    };
    auto is_ref_mirror = [&](int c) { return !mirrors.empty() && c == mirrors.front(); };
    using Op = SymmetryOperation;

    auto push = [&](std::string label, int dim, Character ch) {
        const int idx = static_cast<int>(t.irreps.size());
        t.irreps.push_back({std::move(label), dim, std::move(ch), idx});
    };

    push("A1", 1, row([](const Op&, int) { return Complex(1.0); }));
    push("A2", 1, row([](const Op& op, int) { return Complex(op.kind == Op::Kind::reflection ? -1.0 : 1.0); }));
    if (n % 2 == 0) {
        for (int sign : {1, -1}) {
            push(sign == 1 ? "B1" : "B2", 1, row([&](const Op& op, int c) {
                     if (op.kind == Op::Kind::reflection)
                         return Complex(is_ref_mirror(c) ? sign : -sign);
                     return Complex(op.step % 2 == 0 ? 1.0 : -1.0);
                 }));
        }
    }
    const int two_dim = (n + 1) / 2 - 1;
    for (int k = 1; k <= two_dim; ++k) {
        const std::string label = two_dim == 1 ? "E" : "E" + std::to_string(k);
        push(label, 2, row([&](const Op& op, int) {
                 if (op.kind == Op::Kind::reflection) return Complex(0.0);
                 return Complex(2.0 * root_of_unity(n, 1LL * k * op.step).real());
             }));
    }
    return t;
}

Character reducible_character(const SymmetryCensus& census, const PointGroup& group, bool pinned) {
    if (static_cast<int>(census.classes.size()) != group.class_count())
        throw DimensionMismatch("census has " + std::to_string(census.classes.size()) + " classes, group " +
                                group.name() + " has " + std::to_string(group.class_count()));
    Character ch;
    for (int c = 0; c < group.class_count(); ++c) {
        const auto& op = group.element(group.classes()[static_cast<std::size_t>(c)].representative());
        const Eigen::Matrix2d t = op.matrix();
        const double trace = t.trace();
        const double det = op.kind == SymmetryOperation::Kind::reflection ? -1.0 : 1.0;
        const auto& cc = census.classes[static_cast<std::size_t>(c)];
        double value = cc.unshifted_vertices * trace - cc.unshifted_edges;
        if (!pinned) value -= trace + det;
        ch.values.emplace_back(value, 0.0);
    }
    return ch;
}

int IrrepDecomposition::operator[](const std::string& label) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == label) return coefficients[i];
    return 0;
}

int IrrepDecomposition::weighted_sum() const {
    int s = 0;
    for (std::size_t i = 0; i < coefficients.size(); ++i) s += dimensions[i] * coefficients[i];
    return s;
}

std::string IrrepDecomposition::to_string() const {
    std::ostringstream out;
    bool first = true;
    for (std::size_t i = 0; i < coefficients.size(); ++i) {
        const int c = coefficients[i];
        if (c == 0) continue;
        if (first) out << (c < 0 ? "-" : "");
        else out << (c < 0 ? " - " : " + ");
        if (std::abs(c) != 1) out << std::abs(c);
        out << labels[i];
        first = false;
    }
    return first ? "0" : out.str();
}

IrrepDecomposition empty_decomposition(const CharacterTable& table) {
    IrrepDecomposition d;
    for (const auto& r : table.irreps) {
        d.labels.push_back(r.label);
        d.dimensions.push_back(r.dimension);
        d.coefficients.push_back(0);
    }
    return d;
}

IrrepDecomposition reduce(const Character& ch, const CharacterTable& table, double tol) {
    if (ch.size() != table.class_sizes.size())
        throw DimensionMismatch("character has " + std::to_string(ch.size()) + " entries, table has " +
                                std::to_string(table.class_sizes.size()) + " classes");
    IrrepDecomposition d = empty_decomposition(table);
    const double order = table.order();
    for (std::size_t i = 0; i < table.irreps.size(); ++i) {
        Complex sum = 0.0;
        for (std::size_t c = 0; c < ch.size(); ++c)
            sum += static_cast<double>(table.class_sizes[c]) * ch[c] * std::conj(table.irreps[i].character[c]);
        sum /= order;
        const double rounded = std::round(sum.real());
        if (std::abs(sum.imag()) > tol || std::abs(sum.real() - rounded) > tol) {
            std::ostringstream msg;
            msg.imbue(std::locale::classic());
            msg.precision(12);
            msg << "multiplicity of " << table.irreps[i].label << " is " << sum.real();
            if (std::abs(sum.imag()) > tol) msg << (sum.imag() < 0 ? " - " : " + ") << std::abs(sum.imag()) << "i";
            throw NonIntegerMultiplicity(msg.str());
        }
        d.coefficients[i] = static_cast<int>(rounded);
    }
    return d;
}

Character reconstruct(const IrrepDecomposition& dec, const CharacterTable& table) {
    Character ch;
    ch.values.assign(table.class_sizes.size(), 0.0);
    for (std::size_t i = 0; i < table.irreps.size(); ++i)
        for (std::size_t c = 0; c < ch.size(); ++c)
            ch[c] += static_cast<double>(dec.coefficients[i]) * table.irreps[i].character[c];
    return ch;
}

Complex trig_sum(int n, int t) {
    if (n < 3) throw DomainError("trig_sum needs n >= 3");
    if (t < 1 || t > n - 1) throw DomainError("trig_sum needs 1 <= t <= n-1");
    Complex sum = 0.0;
    for (int j = 0; j < n; ++j) sum += root_of_unity(n, 1LL * t * j) * std::cos(2.0 * pi * j / n);
    return sum;
}

}  // namespace symstress
