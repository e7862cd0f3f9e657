#include "mhc/hodge.hpp"

#include <algorithm>
#include <sstream>

namespace mhc {

HodgeAtom HodgeAtom::tate(int k) {
    HodgeAtom a;
    a.tate_ = true;
    a.tate_k_ = k;
    a.weight_ = 2 * k;
    return a;
}

HodgeAtom HodgeAtom::named(const std::string& id, int weight, HodgeNumbers numbers) {
    if (id.empty())
        throw InputError("atom identifier must be nonempty");
    if (numbers.empty())
        throw InputError("atom '" + id + "' has no Hodge numbers");
    for (const auto& [key, mult] : numbers) {
        auto [a, b] = key;
        if (mult <= 0)
            throw InputError("atom '" + id + "' has nonpositive multiplicity at (" +
                             std::to_string(a) + "," + std::to_string(b) + ")");
        if (a + b != weight)
            throw InputError("atom '" + id + "' stores (" + std::to_string(a) + "," +
                             std::to_string(b) + ") but has weight " + std::to_string(weight));
        auto mirror = numbers.find({b, a});
        if (mirror == numbers.end() || mirror->second != mult)
            throw InputError("atom '" + id + "' breaks Hodge symmetry at (" + std::to_string(a) +
                             "," + std::to_string(b) + ")");
    }
    HodgeAtom out;
    out.parts_ = {id};
    out.weight_ = weight;
    out.numbers_ = std::move(numbers);
    return out;
}

std::string HodgeAtom::id() const {
    if (tate_)
        return "Q(" + std::to_string(-tate_k_) + ")";
    std::string out;
    for (const auto& part : parts_) {
        if (!out.empty())
            out += '*';
        out += part;
    }
    return out;
}

std::int64_t HodgeAtom::dimension() const {
    if (tate_)
        return 1;
    std::int64_t total = 0;
    for (const auto& [key, mult] : numbers_)
        total += mult;
    return total;
}

int HodgeAtom::least_index() const {
    if (tate_)
        return tate_k_;
    // Keys are ordered lexicographically, so the first key has the least a.
    return numbers_.begin()->first.first;
}

HodgeAtom::HodgeNumbers HodgeAtom::hodge_numbers() const {
    if (tate_)
        return {{{tate_k_, tate_k_}, 1}};
    return numbers_;
}

HodgeAtom HodgeAtom::twisted(int k) const {
    if (k == 0)
        return *this;
    if (tate_)
        return tate(tate_k_ + k);
    HodgeAtom out;
    out.parts_ = parts_;
    out.weight_ = weight_ + 2 * k;
    for (const auto& [key, mult] : numbers_)
        out.numbers_[{key.first + k, key.second + k}] = mult;
    return out;
}

HodgeAtom atom_tensor(const HodgeAtom& a, const HodgeAtom& b) {
    if (a.is_tate())
        return b.twisted(a.tate_power());
    if (b.is_tate())
        return a.twisted(b.tate_power());
    HodgeAtom out;
    out.weight_ = a.weight_ + b.weight_;
    out.parts_.reserve(a.parts_.size() + b.parts_.size());
    std::merge(a.parts_.begin(), a.parts_.end(), b.parts_.begin(), b.parts_.end(),
               std::back_inserter(out.parts_));
    for (const auto& [ka, ma] : a.numbers_)
        for (const auto& [kb, mb] : b.numbers_)
            out.numbers_[{ka.first + kb.first, ka.second + kb.second}] += ma * mb;
    return out;
}

std::string to_string(const HodgeAtom& atom) {
    if (atom.is_tate())
        return atom.id();
    std::ostringstream out;
    out << atom.id() << "@" << atom.weight() << "{";
    bool first = true;
    for (const auto& [key, mult] : atom.hodge_numbers()) {
        if (!first)
            out << ",";
        first = false;
        out << key.first << ":" << key.second << "=" << mult;
    }
    out << "}";
    return out.str();
}

HodgeClass HodgeClass::single(const HodgeAtom& atom, std::int64_t mult) {
    HodgeClass out;
    out.add(atom, mult);
    return out;
}

HodgeClass& HodgeClass::add(const HodgeAtom& atom, std::int64_t mult) {
    if (mult == 0)
        return *this;
    auto it = terms_.find(atom);
    if (it == terms_.end()) {
        terms_.emplace(atom, mult);
    } else if ((it->second += mult) == 0) {
        terms_.erase(it);
    }
    return *this;
}

std::int64_t HodgeClass::coefficient(const HodgeAtom& atom) const {
    auto it = terms_.find(atom);
    return it == terms_.end() ? 0 : it->second;
}

bool HodgeClass::has_composite_atom() const {
    for (const auto& [atom, mult] : terms_)
        if (!atom.simple())
            return true;
    return false;
}

HodgeClass HodgeClass::operator-() const {
    HodgeClass out;
    for (const auto& [atom, mult] : terms_)
        out.terms_.emplace(atom, -mult);
    return out;
}

HodgeClass& HodgeClass::operator+=(const HodgeClass& rhs) {
    for (const auto& [atom, mult] : rhs.terms_)
        add(atom, mult);
    return *this;
}

HodgeClass& HodgeClass::operator-=(const HodgeClass& rhs) {
    for (const auto& [atom, mult] : rhs.terms_)
        add(atom, -mult);
    return *this;
}

HodgeClass operator*(std::int64_t c, const HodgeClass& x) {
    HodgeClass out;
    if (c == 0)
        return out;
    for (const auto& [atom, mult] : x.terms_)
        out.terms_.emplace(atom, c * mult);
    return out;
}

HodgeClass tensor(const HodgeClass& a, const HodgeClass& b) {
    HodgeClass out;
    for (const auto& [atom_a, mult_a] : a.terms())
        for (const auto& [atom_b, mult_b] : b.terms())
            out.add(atom_tensor(atom_a, atom_b), mult_a * mult_b);
    return out;
}

std::string to_string(const HodgeClass& h) {
    if (h.zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [atom, mult] : h.terms()) {
        if (first) {
            if (mult < 0)
                out << "-";
        } else {
            out << (mult < 0 ? " - " : " + ");
        }
        first = false;
        std::int64_t abs_mult = mult < 0 ? -mult : mult;
        if (abs_mult != 1)
            out << abs_mult << "*";
        out << to_string(atom);
    }
    return out.str();
}

FilteredHodgeClass FilteredHodgeClass::unit() {
    FilteredHodgeClass out;
    out.add(0, HodgeAtom::tate(0), 1);
    return out;
}

FilteredHodgeClass& FilteredHodgeClass::add(int step, const HodgeClass& cls) {
    if (cls.zero())
        return *this;
    auto [it, inserted] = steps_.try_emplace(step, cls);
    if (!inserted) {
        it->second += cls;
        if (it->second.zero())
            steps_.erase(it);
    }
    return *this;
}

FilteredHodgeClass& FilteredHodgeClass::add(int step, const HodgeAtom& atom, std::int64_t mult) {
    return add(step, HodgeClass::single(atom, mult));
}

bool FilteredHodgeClass::has_composite_atom() const {
    for (const auto& [step, cls] : steps_)
        if (cls.has_composite_atom())
            return true;
    return false;
}

FilteredHodgeClass FilteredHodgeClass::operator-() const {
    FilteredHodgeClass out;
    for (const auto& [step, cls] : steps_)
        out.steps_.emplace(step, -cls);
    return out;
}

FilteredHodgeClass& FilteredHodgeClass::operator+=(const FilteredHodgeClass& rhs) {
    for (const auto& [step, cls] : rhs.steps_)
        add(step, cls);
    return *this;
}

FilteredHodgeClass& FilteredHodgeClass::operator-=(const FilteredHodgeClass& rhs) {
    for (const auto& [step, cls] : rhs.steps_)
        add(step, -cls);
    return *this;
}

FilteredHodgeClass operator*(std::int64_t c, const FilteredHodgeClass& x) {
    FilteredHodgeClass out;
    if (c == 0)
        return out;
    for (const auto& [step, cls] : x.steps_)
        out.steps_.emplace(step, c * cls);
    return out;
}

FilteredHodgeClass tensor(const FilteredHodgeClass& a, const FilteredHodgeClass& b) {
    FilteredHodgeClass out;
    for (const auto& [step_a, cls_a] : a.steps())
        for (const auto& [step_b, cls_b] : b.steps())
            out.add(step_a + step_b, tensor(cls_a, cls_b));
    return out;
}

FilteredHodgeClass tate_class(int k) {
    FilteredHodgeClass out;
    out.add(k, HodgeAtom::tate(k), 1);
    return out;
}

FilteredHodgeClass tate_twist(const FilteredHodgeClass& x, int k) {
    if (k == 0)
        return x;
    FilteredHodgeClass out;
    for (const auto& [step, cls] : x.steps()) {
        HodgeClass twisted;
        for (const auto& [atom, mult] : cls.terms())
            twisted.add(atom.twisted(k), mult);
        out.add(step + k, twisted);
    }
    return out;
}

FilteredHodgeClass weight_truncate(const FilteredHodgeClass& x, int m) {
    FilteredHodgeClass out;
    for (const auto& [step, cls] : x.steps()) {
        HodgeClass kept;
        for (const auto& [atom, mult] : cls.terms())
            if (atom.weight() > -m)
                kept.add(atom, mult);
        out.add(step, kept);
    }
    return out;
}

std::string to_string(const FilteredHodgeClass& x) {
    if (x.zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [step, cls] : x.steps()) {
        if (!first)
            out << "; ";
        first = false;
        out << "step " << step << ": " << to_string(cls);
    }
    return out.str();
}

Realized level_filtration(const HodgeClass& h) {
    Realized out;
    for (const auto& [atom, mult] : h.terms()) {
        out.cls.add(atom.least_index(), atom, mult);
        if (!atom.simple())
            out.heuristic = true;
    }
    return out;
}

HodgeClass forget_filtration(const FilteredHodgeClass& x) {
    HodgeClass out;
    for (const auto& [step, cls] : x.steps())
        out += cls;
    return out;
}

FPPolynomial FPPolynomial::monomial(std::int64_t c, int t_exp, int u_exp) {
    FPPolynomial out;
    out.add(t_exp, u_exp, c);
    return out;
}

FPPolynomial& FPPolynomial::add(int t_exp, int u_exp, std::int64_t c) {
    if (c == 0)
        return *this;
    auto key = std::pair{t_exp, u_exp};
    auto it = coef_.find(key);
    if (it == coef_.end()) {
        coef_.emplace(key, c);
    } else if ((it->second += c) == 0) {
        coef_.erase(it);
    }
    return *this;
}

std::int64_t FPPolynomial::coefficient(int t_exp, int u_exp) const {
    auto it = coef_.find({t_exp, u_exp});
    return it == coef_.end() ? 0 : it->second;
}

bool FPPolynomial::agree_above_t(const FPPolynomial& other, int bound) const {
    for (const auto& [key, c] : coef_)
        if (key.first > bound && other.coefficient(key.first, key.second) != c)
            return false;
    for (const auto& [key, c] : other.coef_)
        if (key.first > bound && coefficient(key.first, key.second) != c)
            return false;
    return true;
}

FPPolynomial FPPolynomial::operator-() const {
    FPPolynomial out;
    for (const auto& [key, c] : coef_)
        out.coef_.emplace(key, -c);
    return out;
}

FPPolynomial& FPPolynomial::operator+=(const FPPolynomial& rhs) {
    for (const auto& [key, c] : rhs.coef_)
        add(key.first, key.second, c);
    return *this;
}

FPPolynomial& FPPolynomial::operator-=(const FPPolynomial& rhs) {
    for (const auto& [key, c] : rhs.coef_)
        add(key.first, key.second, -c);
    return *this;
}

FPPolynomial operator*(const FPPolynomial& lhs, const FPPolynomial& rhs) {
    FPPolynomial out;
    for (const auto& [ka, ca] : lhs.coef_)
        for (const auto& [kb, cb] : rhs.coef_)
            out.add(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return out;
}

FPPolynomial operator*(std::int64_t c, const FPPolynomial& x) {
    FPPolynomial out;
    if (c == 0)
        return out;
    for (const auto& [key, coef] : x.coef_)
        out.coef_.emplace(key, c * coef);
    return out;
}

FPPolynomial filtered_poincare(const FilteredHodgeClass& x) {
    FPPolynomial out;
    for (const auto& [step, cls] : x.steps()) {
        if (step < 0)
            continue;
        for (const auto& [atom, mult] : cls.terms()) {
            std::int64_t value = mult * atom.dimension();
            for (int p = 0; p <= step; ++p)
                out.add(atom.weight(), p, value);
        }
    }
    return out;
}

FPPolynomial poincare(const HodgeClass& h) {
    FPPolynomial out;
    for (const auto& [atom, mult] : h.terms())
        out.add(atom.weight(), 0, mult * atom.dimension());
    return out;
}

FPPolynomial graded_dimensions(const FilteredHodgeClass& x) {
    FPPolynomial out;
    for (const auto& [step, cls] : x.steps())
        for (const auto& [atom, mult] : cls.terms())
            out.add(atom.weight(), step, mult * atom.dimension());
    return out;
}

namespace {

void append_fp_term(std::ostringstream& out, bool first, std::int64_t c, int i, int p) {
    if (first) {
        if (c < 0)
            out << "-";
    } else {
        out << (c < 0 ? " - " : " + ");
    }
    std::int64_t abs_c = c < 0 ? -c : c;
    std::string mono;
    if (i != 0) {
        mono = "t";
        if (i != 1)
            mono += "^" + std::to_string(i);
    }
    if (p != 0) {
        if (!mono.empty())
            mono += "*";
        mono += "u";
        if (p != 1)
            mono += "^" + std::to_string(p);
    }
    if (mono.empty()) {
        out << abs_c;
    } else {
        if (abs_c != 1)
            out << abs_c << "*";
        out << mono;
    }
}

}  // namespace

std::string to_string(const FPPolynomial& f) {
    if (f.zero())
        return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [key, c] : f.terms()) {
        append_fp_term(out, first, c, key.first, key.second);
        first = false;
    }
    return out.str();
}

}  // namespace mhc
