#ifndef MHC_HODGE_HPP
#define MHC_HODGE_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "mhc/errors.hpp"

// Exact arithmetic in the Grothendieck group of polarizable Hodge structures
// and its filtered variant. A filtered class is stored through its associated
// graded: a finitely supported map from filtration step to a class of pure
// Hodge structures. Every exact sequence of filtered polarizable structures
// splits, so the graded data determines the class and equality is decidable
// by map comparison.

namespace mhc {

/// An irreducible (or pseudo-irreducible) polarizable Hodge structure symbol.
///
/// Two kinds: the Tate structure Q(-k), one-dimensional of type (k,k), and
/// named structures carrying explicit Hodge numbers. Tensoring two named
/// atoms yields a composite pseudo-atom (simple() == false) whose identity is
/// the multiset of its constituent names; its Hodge numbers are the
/// convolution of the factors'. Atoms compare structurally, so the same name
/// at two different weights (e.g. before and after a Tate twist) stays
/// distinct.
class HodgeAtom {
public:
    using HodgeNumbers = std::map<std::pair<int, int>, std::int64_t>;

    static HodgeAtom tate(int k);
    /// User-declared simple atom. Requires: numbers nonempty, multiplicities
    /// positive, every key (a,b) with a+b == weight, and symmetry
    /// numbers(a,b) == numbers(b,a).
    static HodgeAtom named(const std::string& id, int weight, HodgeNumbers numbers);

    bool is_tate() const { return tate_; }
    int tate_power() const { return tate_k_; }
    /// False exactly for composite pseudo-atoms produced by tensoring.
    bool simple() const { return tate_ || parts_.size() <= 1; }
    const std::vector<std::string>& parts() const { return parts_; }
    std::string id() const;
    int weight() const { return weight_; }
    std::int64_t dimension() const;
    /// Least Hodge index c = min{a : h^{a,w-a} > 0}; for Q(-k) this is k.
    /// A simple structure admits only 0 and itself as sub-structures, so its
    /// level filtration jumps exactly at this index.
    int least_index() const;
    HodgeNumbers hodge_numbers() const;
    HodgeAtom twisted(int k) const;

    auto operator<=>(const HodgeAtom&) const = default;

    friend HodgeAtom atom_tensor(const HodgeAtom& a, const HodgeAtom& b);

private:
    HodgeAtom() = default;

    // Comparison order matters for operator<=>: kind, Tate power, identity,
    // weight, Hodge numbers.
    bool tate_ = false;
    int tate_k_ = 0;
    std::vector<std::string> parts_;  // sorted multiset of constituent names
    int weight_ = 0;
    HodgeNumbers numbers_;  // empty for Tate atoms
};

HodgeAtom atom_tensor(const HodgeAtom& a, const HodgeAtom& b);

std::string to_string(const HodgeAtom& atom);

/// Virtual sum of atoms with integer multiplicities (no zero coefficients
/// stored). Negative coefficients arise from the alternating signs on
/// odd-degree cohomology.
class HodgeClass {
public:
    HodgeClass() = default;
    static HodgeClass single(const HodgeAtom& atom, std::int64_t mult = 1);

    HodgeClass& add(const HodgeAtom& atom, std::int64_t mult);
    const std::map<HodgeAtom, std::int64_t>& terms() const { return terms_; }
    std::int64_t coefficient(const HodgeAtom& atom) const;
    bool zero() const { return terms_.empty(); }
    bool has_composite_atom() const;

    HodgeClass operator-() const;
    HodgeClass& operator+=(const HodgeClass& rhs);
    HodgeClass& operator-=(const HodgeClass& rhs);
    friend HodgeClass operator+(HodgeClass lhs, const HodgeClass& rhs) { return lhs += rhs; }
    friend HodgeClass operator-(HodgeClass lhs, const HodgeClass& rhs) { return lhs -= rhs; }
    friend HodgeClass operator*(std::int64_t c, const HodgeClass& x);
    bool operator==(const HodgeClass&) const = default;

private:
    std::map<HodgeAtom, std::int64_t> terms_;
};

/// Bilinear extension of atom_tensor.
HodgeClass tensor(const HodgeClass& a, const HodgeClass& b);

std::string to_string(const HodgeClass& h);

/// A class of filtered Hodge structures, stored as its associated graded:
/// finitely supported map step -> class of Gr^p. Steps may be negative
/// (Tate twists by negative powers arise under localization).
class FilteredHodgeClass {
public:
    FilteredHodgeClass() = default;
    /// Ring unit: Q(0) at step 0.
    static FilteredHodgeClass unit();

    FilteredHodgeClass& add(int step, const HodgeClass& cls);
    FilteredHodgeClass& add(int step, const HodgeAtom& atom, std::int64_t mult);
    const std::map<int, HodgeClass>& steps() const { return steps_; }
    bool zero() const { return steps_.empty(); }
    bool has_composite_atom() const;

    FilteredHodgeClass operator-() const;
    FilteredHodgeClass& operator+=(const FilteredHodgeClass& rhs);
    FilteredHodgeClass& operator-=(const FilteredHodgeClass& rhs);
    friend FilteredHodgeClass operator+(FilteredHodgeClass lhs, const FilteredHodgeClass& rhs) {
        return lhs += rhs;
    }
    friend FilteredHodgeClass operator-(FilteredHodgeClass lhs, const FilteredHodgeClass& rhs) {
        return lhs -= rhs;
    }
    friend FilteredHodgeClass operator*(std::int64_t c, const FilteredHodgeClass& x);
    bool operator==(const FilteredHodgeClass&) const = default;

private:
    std::map<int, HodgeClass> steps_;
};

/// Tensor product with the convolved filtration:
/// Gr^p(x (x) y) = sum over r+s=p of Gr^r x (x) Gr^s y.
FilteredHodgeClass tensor(const FilteredHodgeClass& a, const FilteredHodgeClass& b);

/// Class of Q(-k) filtered with its single jump at step k. tate_class(1) is
/// the realization of the Lefschetz class; k may be negative (its inverse).
FilteredHodgeClass tate_class(int k);

/// Twist every atom by Q(-k) and shift every step by k. Equals tensoring
/// with tate_class(k).
FilteredHodgeClass tate_twist(const FilteredHodgeClass& x, int k);

/// Projection modulo the weight filtration: removes all atoms of weight <= -m.
FilteredHodgeClass weight_truncate(const FilteredHodgeClass& x, int m);

std::string to_string(const FilteredHodgeClass& x);

/// A filtered class together with a soundness flag. heuristic == true means
/// some composite pseudo-atom was placed at its least Hodge index, which for
/// a non-simple structure is only a lower bound on the level filtration.
struct Realized {
    FilteredHodgeClass cls;
    bool heuristic = false;
};

/// Refilter a class of pure structures by level: each atom is placed at its
/// least Hodge index. Exact on simple atoms; flagged when a composite
/// pseudo-atom is present (never silently).
Realized level_filtration(const HodgeClass& h);

/// Forget the filtration: sum of all graded pieces.
HodgeClass forget_filtration(const FilteredHodgeClass& x);

/// Integer Laurent polynomial in two formal variables t (cohomological
/// degree) and u (filtration step). No zero coefficients stored.
class FPPolynomial {
public:
    FPPolynomial() = default;
    static FPPolynomial monomial(std::int64_t c, int t_exp, int u_exp);

    FPPolynomial& add(int t_exp, int u_exp, std::int64_t c);
    const std::map<std::pair<int, int>, std::int64_t>& terms() const { return coef_; }
    std::int64_t coefficient(int t_exp, int u_exp) const;
    bool zero() const { return coef_.empty(); }
    /// True when all coefficients at t-degrees strictly above `bound` agree.
    bool agree_above_t(const FPPolynomial& other, int bound) const;

    FPPolynomial operator-() const;
    FPPolynomial& operator+=(const FPPolynomial& rhs);
    FPPolynomial& operator-=(const FPPolynomial& rhs);
    friend FPPolynomial operator+(FPPolynomial lhs, const FPPolynomial& rhs) { return lhs += rhs; }
    friend FPPolynomial operator-(FPPolynomial lhs, const FPPolynomial& rhs) { return lhs -= rhs; }
    friend FPPolynomial operator*(const FPPolynomial& lhs, const FPPolynomial& rhs);
    friend FPPolynomial operator*(std::int64_t c, const FPPolynomial& x);
    bool operator==(const FPPolynomial&) const = default;

private:
    std::map<std::pair<int, int>, std::int64_t> coef_;
};

/// Filtered Poincare polynomial: coefficient of t^i u^p is the signed
/// dimension of the p-th nested filtration piece in weight i. The stored
/// graded data is converted by suffix summation (dim N^p = sum of graded
/// dimensions over steps q >= p) and rows with p < 0 are dropped, since a
/// coniveau filtration starts at N^0 = H.
FPPolynomial filtered_poincare(const FilteredHodgeClass& x);

/// Plain Poincare polynomial: coefficient of t^w is the signed dimension in
/// weight w. u-free.
FPPolynomial poincare(const HodgeClass& h);

/// Raw graded dump: coefficient of t^w u^p is the signed dimension of Gr^p
/// in weight w, with no suffix summation and no clamping of p.
FPPolynomial graded_dimensions(const FilteredHodgeClass& x);

std::string to_string(const FPPolynomial& f);

}  // namespace mhc

#endif
