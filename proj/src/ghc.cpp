#include "mhc/ghc.hpp"

#include <algorithm>
#include <set>

namespace mhc {

const char* to_string(GhcVerdict verdict) {
    switch (verdict) {
        case GhcVerdict::criterion_holds:
            return "criterion-holds";
        case GhcVerdict::criterion_fails:
            return "criterion-fails";
        default:
            return "heuristic-flagged";
    }
}

namespace {

std::int64_t parity_sign(int degree) {
    return (degree % 2 + 2) % 2 == 0 ? 1 : -1;
}

// Accumulates per-cell positive and negative contributions so a comparison
// that mixes signs from several terms can be called out.
struct SignedAccumulator {
    FPPolynomial total;
    std::map<std::pair<int, int>, std::pair<std::int64_t, std::int64_t>> pos_neg;

    void add(const FPPolynomial& contribution) {
        for (const auto& [key, c] : contribution.terms()) {
            auto& [pos, neg] = pos_neg[key];
            if (c > 0)
                pos += c;
            else
                neg += c;
        }
        total += contribution;
    }

    std::vector<std::pair<int, int>> mixed_cells() const {
        std::vector<std::pair<int, int>> out;
        for (const auto& [key, pn] : pos_neg)
            if (pn.first > 0 && pn.second < 0)
                out.push_back(key);
        return out;
    }
};

GhcReport build_report(const SignedAccumulator& coniveau, const SignedAccumulator& level,
                       bool heuristic) {
    GhcReport report;
    report.fp_coniveau = coniveau.total;
    report.fp_level = level.total;
    report.heuristic = heuristic;

    std::set<std::pair<int, int>> keys;
    for (const auto& [key, c] : report.fp_coniveau.terms())
        keys.insert(key);
    for (const auto& [key, c] : report.fp_level.terms())
        keys.insert(key);
    for (const auto& [i, p] : keys) {
        std::int64_t cn = report.fp_coniveau.coefficient(i, p);
        std::int64_t cl = report.fp_level.coefficient(i, p);
        if (cn != cl)
            report.failures.push_back({i, p, parity_sign(i) * cn, parity_sign(i) * cl});
    }

    std::set<std::pair<int, int>> mixed;
    for (const auto& cell : coniveau.mixed_cells())
        mixed.insert(cell);
    for (const auto& cell : level.mixed_cells())
        mixed.insert(cell);
    report.mixed_sign_cells.assign(mixed.begin(), mixed.end());

    if (heuristic)
        report.overall = GhcVerdict::heuristic_flagged;
    else
        report.overall = report.failures.empty() ? GhcVerdict::criterion_holds
                                                 : GhcVerdict::criterion_fails;
    return report;
}

}  // namespace

GhcReport ghc_check(const MotivicClass& x, const Registry& registry) {
    SignedAccumulator coniveau;
    SignedAccumulator level;
    bool heuristic = false;
    for (const auto& [term, coeff] : x.terms()) {
        Realized rn = realize_term_coniveau(term, registry);
        Realized rl = level_filtration(forget_filtration(rn.cls));
        heuristic |= rn.heuristic || rl.heuristic;
        coniveau.add(coeff * filtered_poincare(rn.cls));
        level.add(coeff * filtered_poincare(rl.cls));
    }
    return build_report(coniveau, level, heuristic);
}

GhcReport ghc_check(const VarietyTable& table) {
    SignedAccumulator coniveau;
    SignedAccumulator level;
    Realized rl = level_class(table);
    coniveau.add(filtered_poincare(coniveau_class(table)));
    level.add(filtered_poincare(rl.cls));
    return build_report(coniveau, level, rl.heuristic);
}

bool kernel_check(const MotivicClass& x, const Registry& registry) {
    return realize_coniveau(x, registry).cls == realize_level(x, registry).cls;
}

bool kernel_check(const VarietyTable& table) {
    return coniveau_class(table) == level_class(table).cls;
}

namespace {

std::vector<GhcFailure> failures_above(const std::vector<GhcFailure>& failures, int bound) {
    std::vector<GhcFailure> out;
    for (const auto& f : failures)
        if (f.degree > bound)
            out.push_back(f);
    return out;
}

}  // namespace

TransferReport ghc_transfer(const MotivicClass& a, const MotivicClass& b, int precision,
                            const Registry& registry) {
    TransferReport report;
    report.precision = precision;
    report.truncated_difference = dimension_truncate(a - b, precision, registry);
    report.classes_equal = report.truncated_difference.is_zero();
    report.left = ghc_check(a, registry);
    report.right = ghc_check(b, registry);
    report.left.precision = precision;
    report.right.precision = precision;
    if (!report.classes_equal)
        return report;

    int bound = -precision;
    report.fp_coniveau_agree = report.left.fp_coniveau.agree_above_t(report.right.fp_coniveau,
                                                                     bound);
    report.fp_level_agree = report.left.fp_level.agree_above_t(report.right.fp_level, bound);
    report.verdicts_coincide = failures_above(report.left.failures, bound) ==
                               failures_above(report.right.failures, bound);
    report.established =
        report.fp_coniveau_agree && report.fp_level_agree && report.verdicts_coincide;
    return report;
}

}  // namespace mhc
