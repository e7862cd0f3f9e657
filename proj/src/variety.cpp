#include "mhc/variety.hpp"

#include <sstream>

namespace mhc {

VarietyTable::VarietyTable(std::string name, int dimension, Provenance provenance,
                           Soundness soundness)
    : name_(std::move(name)), dim_(dimension), provenance_(provenance), soundness_(soundness) {
    if (dimension < 0)
        throw InputError("variety dimension must be nonnegative");
}

const HodgeClass* VarietyTable::cell(int degree, int step) const {
    auto it = cells_.find({degree, step});
    return it == cells_.end() ? nullptr : &it->second;
}

VarietyTable& VarietyTable::add_entry(int degree, int step, const HodgeAtom& atom,
                                      std::int64_t mult) {
    return add_entry(degree, step, HodgeClass::single(atom, mult));
}

VarietyTable& VarietyTable::add_entry(int degree, int step, const HodgeClass& cls) {
    if (cls.zero())
        return *this;
    auto key = std::pair{degree, step};
    auto [it, inserted] = cells_.try_emplace(key, cls);
    if (!inserted) {
        it->second += cls;
        if (it->second.zero())
            cells_.erase(it);
    }
    return *this;
}

bool VarietyTable::same_cohomology(const VarietyTable& other) const {
    return dim_ == other.dim_ && cells_ == other.cells_;
}

VarietyTable point_table() {
    VarietyTable t("point", 0, Provenance::builtin);
    t.add_entry(0, 0, HodgeAtom::tate(0), 1);
    return t;
}

VarietyTable projective_space_table(int n) {
    if (n < 0)
        throw InputError("projective space dimension must be nonnegative");
    VarietyTable t("P" + std::to_string(n), n, Provenance::builtin);
    for (int k = 0; k <= n; ++k)
        t.add_entry(2 * k, k, HodgeAtom::tate(k), 1);
    return t;
}

VarietyTable curve_table(int genus) {
    if (genus < 0)
        throw InputError("curve genus must be nonnegative");
    VarietyTable t("C_" + std::to_string(genus), 1, Provenance::builtin);
    t.add_entry(0, 0, HodgeAtom::tate(0), 1);
    if (genus > 0) {
        // H^1 of a genus-g curve has coniveau 0: restriction to any open
        // subcurve is injective on H^1. Classical fact, recorded as data.
        HodgeAtom::HodgeNumbers h;
        h[{1, 0}] = genus;
        h[{0, 1}] = genus;
        t.add_entry(1, 0, HodgeAtom::named("S_" + std::to_string(genus), 1, std::move(h)), 1);
    }
    t.add_entry(2, 1, HodgeAtom::tate(1), 1);
    return t;
}

namespace {

// One Tate-twisted copy of the source table, shifted by strand k: cell (i,p)
// lands at (i+2k, p+k).
void add_twisted_strand(VarietyTable& dest, const VarietyTable& source, int k) {
    for (const auto& [key, cls] : source.cells()) {
        HodgeClass twisted;
        for (const auto& [atom, mult] : cls.terms())
            twisted.add(atom.twisted(k), mult);
        dest.add_entry(key.first + 2 * k, key.second + k, twisted);
    }
}

}  // namespace

VarietyTable exceptional_table(const VarietyTable& center, int codim, int ambient_dim) {
    if (codim < 2)
        throw InputError("blow-up codimension must be at least 2");
    if (center.dimension() + codim != ambient_dim)
        throw InputError("dimension mismatch: center " + std::to_string(center.dimension()) +
                         " + codim " + std::to_string(codim) + " != ambient " +
                         std::to_string(ambient_dim));
    int fiber_dim = codim - 1;
    VarietyTable t("E[" + center.name() + ",c" + std::to_string(codim) + "]",
                   center.dimension() + fiber_dim, Provenance::constructed, center.soundness());
    for (int k = 0; k <= fiber_dim; ++k)
        add_twisted_strand(t, center, k);
    return t;
}

VarietyTable blowup_table(const VarietyTable& ambient, const VarietyTable& center, int codim) {
    if (codim < 2)
        throw InputError("blow-up codimension must be at least 2");
    if (center.dimension() + codim != ambient.dimension())
        throw InputError("dimension mismatch: center " + std::to_string(center.dimension()) +
                         " + codim " + std::to_string(codim) + " != ambient " +
                         std::to_string(ambient.dimension()));
    Soundness soundness = (ambient.soundness() == Soundness::exact &&
                           center.soundness() == Soundness::exact)
                              ? Soundness::exact
                              : Soundness::tensor_heuristic;
    VarietyTable t("Bl[" + center.name() + "]" + ambient.name(), ambient.dimension(),
                   Provenance::constructed, soundness);
    for (const auto& [key, cls] : ambient.cells())
        t.add_entry(key.first, key.second, cls);
    for (int k = 1; k <= codim - 1; ++k)
        add_twisted_strand(t, center, k);
    return t;
}

VarietyTable product_table(const VarietyTable& x, const VarietyTable& y) {
    bool exact_kunneth = mixed_tate(x) || mixed_tate(y);
    Soundness soundness = (exact_kunneth && x.soundness() == Soundness::exact &&
                           y.soundness() == Soundness::exact)
                              ? Soundness::exact
                              : Soundness::tensor_heuristic;
    VarietyTable t(x.name() + "*" + y.name(), x.dimension() + y.dimension(),
                   Provenance::constructed, soundness);
    for (const auto& [key_x, cls_x] : x.cells())
        for (const auto& [key_y, cls_y] : y.cells())
            t.add_entry(key_x.first + key_y.first, key_x.second + key_y.second,
                        tensor(cls_x, cls_y));
    return t;
}

bool mixed_tate(const VarietyTable& table) {
    for (const auto& [key, cls] : table.cells())
        for (const auto& [atom, mult] : cls.terms())
            if (!atom.is_tate())
                return false;
    return true;
}

FilteredHodgeClass coniveau_class(const VarietyTable& table) {
    FilteredHodgeClass out;
    for (const auto& [key, cls] : table.cells()) {
        std::int64_t sign = key.first % 2 == 0 ? 1 : -1;
        out.add(key.second, sign * cls);
    }
    return out;
}

Realized level_class(const VarietyTable& table) {
    Realized out = level_filtration(forget_filtration(coniveau_class(table)));
    if (table.soundness() == Soundness::tensor_heuristic)
        out.heuristic = true;
    return out;
}

namespace {

TableViolation make_violation(int degree, int step, const char* rule, std::string detail,
                              bool lint = false) {
    return TableViolation{degree, step, rule, std::move(detail), lint};
}

}  // namespace

std::vector<TableViolation> validate_table(const VarietyTable& table, bool duality_lint) {
    std::vector<TableViolation> out;
    int d = table.dimension();
    for (const auto& [key, cls] : table.cells()) {
        auto [i, p] = key;
        if (i < 0 || i > 2 * d)
            out.push_back(make_violation(i, p, "degree-range",
                                         "degree outside 0.." + std::to_string(2 * d)));
        if (p < 0)
            out.push_back(make_violation(i, p, "step-range", "negative coniveau step"));
        if (2 * p > i)
            out.push_back(make_violation(i, p, "weight-2p-vanishing",
                                         "step " + std::to_string(p) + " exceeds degree/2"));
        for (const auto& [atom, mult] : cls.terms()) {
            if (mult < 0)
                out.push_back(make_violation(i, p, "negative-multiplicity",
                                             "atom " + atom.id() + " has multiplicity " +
                                                 std::to_string(mult)));
            if (atom.weight() != i)
                out.push_back(make_violation(
                    i, p, "weight-purity",
                    "atom " + atom.id() + " of weight " + std::to_string(atom.weight()) +
                        " stored at degree " + std::to_string(i)));
            if (p > atom.least_index())
                out.push_back(make_violation(
                    i, p, "coniveau-exceeds-level",
                    "step " + std::to_string(p) + " > least Hodge index " +
                        std::to_string(atom.least_index()) + " of atom " + atom.id()));
        }
    }

    // Connectedness lint: H^0 = Q(0) at step 0 and H^{2d} = Q(-d) at step d.
    auto expect_single = [&](int degree, int step, const HodgeAtom& atom) {
        bool ok = true;
        for (const auto& [key, cls] : table.cells())
            if (key.first == degree && (key.second != step || cls != HodgeClass::single(atom)))
                ok = false;
        if (table.cell(degree, step) == nullptr)
            ok = false;
        if (!ok)
            out.push_back(make_violation(degree, step, "normalization",
                                         "degree " + std::to_string(degree) +
                                             " is not exactly " + atom.id() + " at step " +
                                             std::to_string(step),
                                         true));
    };
    expect_single(0, 0, HodgeAtom::tate(0));
    expect_single(2 * d, d, HodgeAtom::tate(d));

    if (duality_lint) {
        std::map<int, std::int64_t> degree_dim;
        for (const auto& [key, cls] : table.cells())
            for (const auto& [atom, mult] : cls.terms())
                degree_dim[key.first] += mult * atom.dimension();
        for (int i = 0; i <= d; ++i) {
            std::int64_t low = degree_dim.count(i) ? degree_dim[i] : 0;
            std::int64_t high = degree_dim.count(2 * d - i) ? degree_dim[2 * d - i] : 0;
            if (low != high)
                out.push_back(make_violation(i, 0, "poincare-duality",
                                             "dim H^" + std::to_string(i) + " = " +
                                                 std::to_string(low) + " but dim H^" +
                                                 std::to_string(2 * d - i) + " = " +
                                                 std::to_string(high),
                                             true));
        }
    }
    return out;
}

std::string to_string(const TableViolation& v) {
    std::ostringstream out;
    out << (v.lint ? "lint" : "violation") << " at (i=" << v.degree << ",p=" << v.step
        << "): " << v.rule << ": " << v.detail;
    return out.str();
}

}  // namespace mhc
