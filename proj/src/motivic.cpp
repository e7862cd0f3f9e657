#include "mhc/motivic.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace mhc {

namespace {

constexpr long long kMaxLefschetzExponent = 1'000'000;

int checked_twist(long long power) {
    if (power > kMaxLefschetzExponent || power < -kMaxLefschetzExponent)
        throw InputError("Lefschetz exponent " + std::to_string(power) +
                         " out of supported range");
    return static_cast<int>(power);
}

}  // namespace

const GeneratorSymbol* Registry::find(const std::string& name) const {
    auto it = symbols_.find(name);
    return it == symbols_.end() ? nullptr : &it->second;
}

const GeneratorSymbol& Registry::require(const std::string& name) const {
    const GeneratorSymbol* sym = find(name);
    if (sym == nullptr)
        throw InputError("unknown generator '" + name + "'");
    return *sym;
}

const GeneratorSymbol& Registry::register_table(VarietyTable table) {
    std::string name = table.name();
    if (reserved_name(name))
        throw InputError("table name '" + name + "' is reserved");
    auto [it, inserted] = symbols_.try_emplace(
        name, GeneratorSymbol{name, table.dimension(),
                              std::make_shared<const VarietyTable>(std::move(table))});
    if (!inserted)
        throw InputError("duplicate table name '" + name + "'");
    return it->second;
}

const GeneratorSymbol& Registry::curve(int genus) {
    if (genus < 1)
        throw InputError("curve generators require genus >= 1");
    std::string name = "C_" + std::to_string(genus);
    auto it = symbols_.find(name);
    if (it == symbols_.end()) {
        VarietyTable table = curve_table(genus);
        it = symbols_
                 .emplace(name, GeneratorSymbol{name, 1, std::make_shared<const VarietyTable>(
                                                             std::move(table))})
                 .first;
    }
    return it->second;
}

bool Registry::reserved_name(const std::string& name) {
    if (name == "point" || name == "L" || name == "curve" || name == "blowup" || name == "prod")
        return true;
    if (curve_genus(name).has_value())
        return true;
    // P followed by digits denotes projective space.
    if (name.size() >= 2 && name[0] == 'P' &&
        std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; }))
        return true;
    return false;
}

std::optional<int> Registry::curve_genus(const std::string& name) {
    if (name.size() < 3 || name[0] != 'C' || name[1] != '_')
        return std::nullopt;
    int genus = 0;
    auto [ptr, ec] = std::from_chars(name.data() + 2, name.data() + name.size(), genus);
    if (ec != std::errc{} || ptr != name.data() + name.size())
        return std::nullopt;
    return genus;
}

MotivicClass MotivicClass::one() {
    MotivicClass out;
    out.add(MotivicTerm{}, 1);
    return out;
}

MotivicClass MotivicClass::lefschetz(long long power) {
    MotivicClass out;
    out.add(MotivicTerm{{}, power}, 1);
    return out;
}

MotivicClass MotivicClass::symbol(const std::string& name) {
    MotivicClass out;
    out.add(MotivicTerm{{name}, 0}, 1);
    return out;
}

MotivicClass& MotivicClass::add(const MotivicTerm& term, std::int64_t coeff) {
    if (coeff == 0)
        return *this;
    auto it = terms_.find(term);
    if (it == terms_.end()) {
        terms_.emplace(term, coeff);
    } else if ((it->second += coeff) == 0) {
        terms_.erase(it);
    }
    return *this;
}

MotivicClass MotivicClass::operator-() const {
    MotivicClass out;
    for (const auto& [term, coeff] : terms_)
        out.terms_.emplace(term, -coeff);
    return out;
}

MotivicClass& MotivicClass::operator+=(const MotivicClass& rhs) {
    for (const auto& [term, coeff] : rhs.terms_)
        add(term, coeff);
    return *this;
}

MotivicClass& MotivicClass::operator-=(const MotivicClass& rhs) {
    for (const auto& [term, coeff] : rhs.terms_)
        add(term, -coeff);
    return *this;
}

MotivicClass operator*(const MotivicClass& lhs, const MotivicClass& rhs) {
    MotivicClass out;
    for (const auto& [ta, ca] : lhs.terms_) {
        for (const auto& [tb, cb] : rhs.terms_) {
            MotivicTerm product;
            product.symbols.reserve(ta.symbols.size() + tb.symbols.size());
            std::merge(ta.symbols.begin(), ta.symbols.end(), tb.symbols.begin(),
                       tb.symbols.end(), std::back_inserter(product.symbols));
            product.lefschetz_power = ta.lefschetz_power + tb.lefschetz_power;
            out.add(product, ca * cb);
        }
    }
    return out;
}

MotivicClass operator*(std::int64_t c, const MotivicClass& x) {
    MotivicClass out;
    if (c == 0)
        return out;
    for (const auto& [term, coeff] : x.terms_)
        out.add(term, c * coeff);
    return out;
}

MotivicClass projective_class(int n) {
    if (n < 0)
        throw InputError("projective space dimension must be nonnegative");
    MotivicClass out;
    for (int k = 0; k <= n; ++k)
        out.add(MotivicTerm{{}, k}, 1);
    return out;
}

long long virtual_dimension(const MotivicTerm& term, const Registry& registry) {
    long long total = term.lefschetz_power;
    for (const auto& name : term.symbols)
        total += registry.require(name).dimension;
    return total;
}

MotivicClass dimension_truncate(const MotivicClass& x, int m, const Registry& registry) {
    MotivicClass out;
    for (const auto& [term, coeff] : x.terms())
        if (virtual_dimension(term, registry) > -static_cast<long long>(m))
            out.add(term, coeff);
    return out;
}

bool equal_mod_dimension(const MotivicClass& a, const MotivicClass& b, int m,
                         const Registry& registry) {
    return dimension_truncate(a - b, m, registry).is_zero();
}

int expr_dimension(const VarietyExpr& expr, const Registry& registry) {
    return std::visit(
        [&](const auto& node) -> int {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, VarietyExpr::Point>) {
                return 0;
            } else if constexpr (std::is_same_v<T, VarietyExpr::ProjSpace>) {
                return node.n;
            } else if constexpr (std::is_same_v<T, VarietyExpr::Curve>) {
                return 1;
            } else if constexpr (std::is_same_v<T, VarietyExpr::Blowup>) {
                return expr_dimension(*node.ambient, registry);
            } else if constexpr (std::is_same_v<T, VarietyExpr::Prod>) {
                return expr_dimension(*node.left, registry) +
                       expr_dimension(*node.right, registry);
            } else {
                static_assert(std::is_same_v<T, VarietyExpr::Ref>);
                if (Registry::curve_genus(node.name).has_value())
                    return 1;
                const GeneratorSymbol* sym = registry.find(node.name);
                if (sym == nullptr)
                    throw SemanticError(expr.loc, "unresolved variety name '" + node.name + "'");
                return sym->dimension;
            }
        },
        expr.node);
}

MotivicClass class_from_expr(const VarietyExpr& expr, Registry& registry) {
    return std::visit(
        [&](const auto& node) -> MotivicClass {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, VarietyExpr::Point>) {
                return MotivicClass::one();
            } else if constexpr (std::is_same_v<T, VarietyExpr::ProjSpace>) {
                return projective_class(node.n);
            } else if constexpr (std::is_same_v<T, VarietyExpr::Curve>) {
                // Genus 0 is projective line, a mixed-Tate built-in.
                if (node.genus == 0)
                    return projective_class(1);
                return MotivicClass::symbol(registry.curve(node.genus).name);
            } else if constexpr (std::is_same_v<T, VarietyExpr::Blowup>) {
                if (node.codim < 2)
                    throw SemanticError(expr.loc, "blow-up codimension must be at least 2, got " +
                                                      std::to_string(node.codim));
                int da = expr_dimension(*node.ambient, registry);
                int dz = expr_dimension(*node.center, registry);
                if (dz + node.codim != da)
                    throw SemanticError(expr.loc, "blow-up dimension mismatch: center " +
                                                      std::to_string(dz) + " + codim " +
                                                      std::to_string(node.codim) +
                                                      " != ambient " + std::to_string(da));
                MotivicClass ambient = class_from_expr(*node.ambient, registry);
                MotivicClass center = class_from_expr(*node.center, registry);
                // [Bl] = [X] + [Z](L + ... + L^{c-1}), from [Bl] - [E] = [X] - [Z]
                // with [E] = [Z][P^{c-1}].
                MotivicClass strands;
                for (int k = 1; k <= node.codim - 1; ++k)
                    strands += MotivicClass::lefschetz(k);
                return ambient + center * strands;
            } else if constexpr (std::is_same_v<T, VarietyExpr::Prod>) {
                return class_from_expr(*node.left, registry) *
                       class_from_expr(*node.right, registry);
            } else {
                static_assert(std::is_same_v<T, VarietyExpr::Ref>);
                if (auto genus = Registry::curve_genus(node.name)) {
                    if (*genus == 0)
                        return projective_class(1);
                    return MotivicClass::symbol(registry.curve(*genus).name);
                }
                if (registry.find(node.name) == nullptr)
                    throw SemanticError(expr.loc, "unresolved variety name '" + node.name + "'");
                return MotivicClass::symbol(node.name);
            }
        },
        expr.node);
}

MotivicClass evaluate(const RingExpr& expr, Registry& registry) {
    return std::visit(
        [&](const auto& node) -> MotivicClass {
            using T = std::decay_t<decltype(node)>;
            if constexpr (std::is_same_v<T, RingExpr::IntLit>) {
                return node.value * MotivicClass::one();
            } else if constexpr (std::is_same_v<T, RingExpr::Lefschetz>) {
                return MotivicClass::lefschetz(node.power);
            } else if constexpr (std::is_same_v<T, RingExpr::Variety>) {
                return class_from_expr(node.expr, registry);
            } else if constexpr (std::is_same_v<T, RingExpr::Negate>) {
                return -evaluate(*node.operand, registry);
            } else {
                static_assert(std::is_same_v<T, RingExpr::Binary>);
                MotivicClass lhs = evaluate(*node.lhs, registry);
                MotivicClass rhs = evaluate(*node.rhs, registry);
                switch (node.op) {
                    case '+':
                        return lhs + rhs;
                    case '-':
                        return lhs - rhs;
                    default:
                        return lhs * rhs;
                }
            }
        },
        expr.node);
}

Realized realize_term_coniveau(const MotivicTerm& term, const Registry& registry) {
    Realized out;
    out.cls = FilteredHodgeClass::unit();
    int non_tate_factors = 0;
    for (const auto& name : term.symbols) {
        const GeneratorSymbol& sym = registry.require(name);
        if (sym.table == nullptr)
            throw InputError("generator '" + name + "' has no linked table");
        if (!mixed_tate(*sym.table))
            ++non_tate_factors;
        if (sym.table->soundness() == Soundness::tensor_heuristic)
            out.heuristic = true;
        out.cls = tensor(out.cls, coniveau_class(*sym.table));
    }
    if (non_tate_factors >= 2)
        out.heuristic = true;
    if (term.lefschetz_power != 0)
        out.cls = tate_twist(out.cls, checked_twist(term.lefschetz_power));
    return out;
}

Realized realize_coniveau(const MotivicClass& x, const Registry& registry) {
    Realized out;
    for (const auto& [term, coeff] : x.terms()) {
        Realized part = realize_term_coniveau(term, registry);
        out.cls += coeff * part.cls;
        out.heuristic |= part.heuristic;
    }
    return out;
}

Realized realize_level(const MotivicClass& x, const Registry& registry) {
    Realized coniveau = realize_coniveau(x, registry);
    Realized level = level_filtration(forget_filtration(coniveau.cls));
    level.heuristic |= coniveau.heuristic;
    return level;
}

std::string to_string(const MotivicClass& x) {
    if (x.is_zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [term, coeff] : x.terms()) {
        if (first) {
            if (coeff < 0)
                out << "-";
        } else {
            out << (coeff < 0 ? " - " : " + ");
        }
        first = false;
        std::int64_t abs_coeff = coeff < 0 ? -coeff : coeff;
        std::string mono;
        for (const auto& name : term.symbols) {
            if (!mono.empty())
                mono += "*";
            mono += name;
        }
        if (term.lefschetz_power != 0) {
            if (!mono.empty())
                mono += "*";
            mono += "L";
            if (term.lefschetz_power != 1)
                mono += "^" + std::to_string(term.lefschetz_power);
        }
        if (mono.empty()) {
            out << abs_coeff;
        } else {
            if (abs_coeff != 1)
                out << abs_coeff << "*";
            out << mono;
        }
    }
    return out.str();
}

}  // namespace mhc
