#ifndef MHC_GHC_HPP
#define MHC_GHC_HPP

#include <optional>
#include <vector>

#include "mhc/motivic.hpp"

// Decides the filtered-Poincare-polynomial criterion: a class satisfies the
// generalized Hodge conjecture criterion exactly when its coniveau and level
// realizations have equal filtered Poincare polynomials, coefficient by
// coefficient. Comparison is exact integer arithmetic; there are no
// tolerances anywhere.

namespace mhc {

enum class GhcVerdict { criterion_holds, criterion_fails, heuristic_flagged };

const char* to_string(GhcVerdict verdict);

/// One failing coefficient pair: at degree i and step p the nested coniveau
/// dimension differs from the nested level dimension. Dimensions are the
/// polynomial coefficients with the sign (-1)^i stripped; for virtual
/// classes with cancellation they can be negative, see mixed_sign_cells.
struct GhcFailure {
    int degree = 0;
    int step = 0;
    std::int64_t dim_coniveau = 0;
    std::int64_t dim_level = 0;

    bool operator==(const GhcFailure&) const = default;
};

struct GhcReport {
    GhcVerdict overall = GhcVerdict::criterion_holds;
    std::vector<GhcFailure> failures;  // ascending (degree, step)
    FPPolynomial fp_coniveau;
    FPPolynomial fp_level;
    bool heuristic = false;
    /// Cells whose coefficient mixes positive and negative contributions
    /// from several generator terms; the per-cell dimension reading is
    /// ambiguous there.
    std::vector<std::pair<int, int>> mixed_sign_cells;
    std::optional<int> precision;
};

GhcReport ghc_check(const MotivicClass& x, const Registry& registry);
GhcReport ghc_check(const VarietyTable& table);

/// True iff the coniveau and level realizations agree as filtered classes.
/// Stronger than polynomial equality in general.
bool kernel_check(const MotivicClass& x, const Registry& registry);
bool kernel_check(const VarietyTable& table);

/// Outcome of comparing two classes at precision m and transferring the
/// criterion verdict between them. When the classes agree modulo the
/// dimension filtration, their filtered Poincare polynomials agree in all
/// t-degrees above -m, so the failing pairs in that range coincide and a
/// verdict for one side is a verdict for the other.
struct TransferReport {
    bool classes_equal = false;
    int precision = 0;
    MotivicClass truncated_difference;  // (a - b) modulo the filtration
    GhcReport left;
    GhcReport right;
    bool fp_coniveau_agree = false;  // in t-degrees > -precision
    bool fp_level_agree = false;
    bool verdicts_coincide = false;  // failing pairs restricted to degree > -precision
    bool established = false;        // transfer valid
};

TransferReport ghc_transfer(const MotivicClass& a, const MotivicClass& b, int precision,
                            const Registry& registry);

}  // namespace mhc

#endif
