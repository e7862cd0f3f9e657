#ifndef MHC_VARIETY_HPP
#define MHC_VARIETY_HPP

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mhc/hodge.hpp"

// Cohomology-with-coniveau tables for smooth projective generators, the
// constructors that stay exact on them (blow-up, exceptional divisor,
// product), and the realization maps into filtered Hodge classes.

namespace mhc {

enum class Provenance { builtin, loaded, constructed };

/// exact: graded data equals the true coniveau graded of the variety the
/// table describes. tensor_heuristic: some cell came from tensoring two
/// non-Tate factors, where the coniveau of a product is not known to be the
/// convolution; the flag propagates to everything derived from the table.
enum class Soundness { exact, tensor_heuristic };

/// Per-degree, per-coniveau-step cohomology data of a smooth projective
/// generator. Cell (i,p) holds the class of Gr^p_N H^i with nonnegative
/// multiplicities; every atom stored at degree i is pure of weight i.
class VarietyTable {
public:
    VarietyTable(std::string name, int dimension, Provenance provenance,
                 Soundness soundness = Soundness::exact);

    const std::string& name() const { return name_; }
    int dimension() const { return dim_; }
    Provenance provenance() const { return provenance_; }
    Soundness soundness() const { return soundness_; }
    const std::map<std::pair<int, int>, HodgeClass>& cells() const { return cells_; }
    const HodgeClass* cell(int degree, int step) const;

    VarietyTable& add_entry(int degree, int step, const HodgeAtom& atom, std::int64_t mult);
    VarietyTable& add_entry(int degree, int step, const HodgeClass& cls);

    /// Signed dimension table comparisons ignore name and provenance.
    bool same_cohomology(const VarietyTable& other) const;

private:
    std::string name_;
    int dim_;
    std::map<std::pair<int, int>, HodgeClass> cells_;
    Provenance provenance_;
    Soundness soundness_;
};

VarietyTable point_table();
VarietyTable projective_space_table(int n);
VarietyTable curve_table(int genus);

/// Table of the exceptional divisor P(N_{Z/X}) of a blow-up along a center
/// with the given table: the projective-bundle decomposition contributes one
/// Tate-twisted copy of the center per strand k = 0..codim-1, with both the
/// degree and the coniveau step shifted by the twist.
VarietyTable exceptional_table(const VarietyTable& center, int codim, int ambient_dim);

/// Table of the blow-up of `ambient` along `center` of the given codimension,
/// treated as formal data: the graded pieces of the blow-up are those of the
/// ambient plus the twisted center strands k = 1..codim-1. This is the unique
/// table consistent with the exceptional-divisor decomposition and the
/// four-term exact sequence relating blow-up, center, ambient and exceptional
/// divisor, for any genuine embedding with these invariants.
VarietyTable blowup_table(const VarietyTable& ambient, const VarietyTable& center, int codim);

/// Kunneth product table. Exact when at least one factor is mixed Tate;
/// otherwise the convolution is only an upper-bound placement and the result
/// carries the tensor_heuristic flag.
VarietyTable product_table(const VarietyTable& x, const VarietyTable& y);

/// True when every atom in every cell is a Tate structure.
bool mixed_tate(const VarietyTable& table);

/// Alternating-sign class of the table in the filtered Grothendieck group,
/// graded by coniveau: step p receives sum over i of (-1)^i Gr^p H^i.
FilteredHodgeClass coniveau_class(const VarietyTable& table);

/// Same underlying class refiltered by level: every atom is re-placed at its
/// least Hodge index, ignoring the stored coniveau steps.
Realized level_class(const VarietyTable& table);

struct TableViolation {
    int degree = 0;
    int step = 0;
    std::string rule;    // stable category name, e.g. "weight-purity"
    std::string detail;  // human-readable explanation
    bool lint = false;   // lints warn, hard violations reject
};

/// Checks all table invariants; returns one violation per offending cell and
/// rule. Empty degree-0 / top-degree normalization failures are lints
/// (disjoint unions and formal tables remain loadable); Poincare-duality
/// symmetry is an optional lint behind `duality_lint`.
std::vector<TableViolation> validate_table(const VarietyTable& table, bool duality_lint = false);

std::string to_string(const TableViolation& v);

}  // namespace mhc

#endif
