#ifndef MHC_MOTIVIC_HPP
#define MHC_MOTIVIC_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mhc/ast.hpp"
#include "mhc/variety.hpp"

// The computable fragment of the Grothendieck ring of varieties, localized
// at the Lefschetz class: integer combinations of generator monomials times
// Lefschetz powers. Mixed-Tate built-ins (point, projective spaces, genus-0
// curves) are expanded eagerly into Lefschetz polynomials, so equality of
// canonical forms decides equality in the fragment. "Equal" always means
// equal in the fragment; distinct normal forms are reported as "not
// identified", never as provably unequal in the full ring.

namespace mhc {

/// A registered smooth projective generator. The table link is required for
/// realization into filtered Hodge classes.
struct GeneratorSymbol {
    std::string name;
    int dimension = 0;
    std::shared_ptr<const VarietyTable> table;
};

/// Name -> generator map. Append-only during the load phase; read-only while
/// expressions are checked. Names C_<g> are reserved for genus-g curves and
/// registered on demand.
class Registry {
public:
    const GeneratorSymbol* find(const std::string& name) const;
    const GeneratorSymbol& require(const std::string& name) const;
    const GeneratorSymbol& register_table(VarietyTable table);
    /// Generator of the genus-g curve (g >= 1), registered on first use.
    const GeneratorSymbol& curve(int genus);

    /// Names with fixed meaning in the expression language; tables cannot
    /// take them.
    static bool reserved_name(const std::string& name);
    /// Parses "C_<g>" into g; nullopt for any other name.
    static std::optional<int> curve_genus(const std::string& name);

private:
    std::map<std::string, GeneratorSymbol> symbols_;
};

/// Monomial in the generators times a Lefschetz power (possibly negative).
struct MotivicTerm {
    std::vector<std::string> symbols;  // sorted multiset of generator names
    long long lefschetz_power = 0;

    auto operator<=>(const MotivicTerm&) const = default;
};

/// Element of the localized Grothendieck ring fragment: finitely supported
/// map from term to integer coefficient, kept canonical (no zeros, sorted
/// monomials).
class MotivicClass {
public:
    MotivicClass() = default;
    static MotivicClass zero() { return {}; }
    static MotivicClass one();
    static MotivicClass lefschetz(long long power);
    static MotivicClass symbol(const std::string& name);

    MotivicClass& add(const MotivicTerm& term, std::int64_t coeff);
    const std::map<MotivicTerm, std::int64_t>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    MotivicClass operator-() const;
    MotivicClass& operator+=(const MotivicClass& rhs);
    MotivicClass& operator-=(const MotivicClass& rhs);
    friend MotivicClass operator+(MotivicClass lhs, const MotivicClass& rhs) { return lhs += rhs; }
    friend MotivicClass operator-(MotivicClass lhs, const MotivicClass& rhs) { return lhs -= rhs; }
    friend MotivicClass operator*(const MotivicClass& lhs, const MotivicClass& rhs);
    friend MotivicClass operator*(std::int64_t c, const MotivicClass& x);
    bool operator==(const MotivicClass&) const = default;

private:
    std::map<MotivicTerm, std::int64_t> terms_;
};

/// 1 + L + ... + L^n, the class of n-dimensional projective space.
MotivicClass projective_class(int n);

/// Sum of generator dimensions plus the Lefschetz exponent; indexes the
/// completion filtration.
long long virtual_dimension(const MotivicTerm& term, const Registry& registry);

/// Drops every term of virtual dimension <= -m.
MotivicClass dimension_truncate(const MotivicClass& x, int m, const Registry& registry);

/// Equality modulo the dimension filtration at precision m.
bool equal_mod_dimension(const MotivicClass& a, const MotivicClass& b, int m,
                         const Registry& registry);

/// Converts a variety expression to its class: point and projective spaces
/// expand to Lefschetz polynomials, a blow-up along a center of codimension
/// c contributes center * (L + ... + L^{c-1}), products multiply. Validates
/// blow-up dimensions and resolves references; throws SemanticError at the
/// offending node.
MotivicClass class_from_expr(const VarietyExpr& expr, Registry& registry);

/// Evaluates a parsed ring expression.
MotivicClass evaluate(const RingExpr& expr, Registry& registry);

int expr_dimension(const VarietyExpr& expr, const Registry& registry);

/// Realization of a single monomial under the coniveau map: tensor of the
/// factors' coniveau classes, Tate-twisted by the Lefschetz exponent.
/// Monomials with two or more non-mixed-Tate factors are flagged, since the
/// coniveau map is not known to be multiplicative.
Realized realize_term_coniveau(const MotivicTerm& term, const Registry& registry);

/// Linear extension of the coniveau realization over the fragment.
Realized realize_coniveau(const MotivicClass& x, const Registry& registry);

/// Level realization: the same underlying class refiltered by least Hodge
/// index. Inherits the coniveau flags plus any composite-atom placement
/// warning.
Realized realize_level(const MotivicClass& x, const Registry& registry);

std::string to_string(const MotivicClass& x);

}  // namespace mhc

#endif
