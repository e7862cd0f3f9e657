#include "mhc/render.hpp"

#include <sstream>

namespace mhc {

std::string machine_fp(const FPPolynomial& f, const char* tag) {
    if (f.zero())
        return "0\n";
    std::ostringstream out;
    for (const auto& [key, c] : f.terms())
        out << tag << " " << key.first << " " << key.second << " " << c << "\n";
    return out.str();
}

std::string machine_mc(const MotivicClass& x) {
    if (x.is_zero())
        return "0\n";
    std::ostringstream out;
    for (const auto& [term, coeff] : x.terms()) {
        std::string symbols;
        for (const auto& name : term.symbols) {
            if (!symbols.empty())
                symbols += "*";
            symbols += name;
        }
        if (symbols.empty())
            symbols = "1";
        out << "mc " << term.lefschetz_power << " " << symbols << " " << coeff << "\n";
    }
    return out.str();
}

std::string machine_ghc(const GhcReport& report) {
    std::ostringstream out;
    out << "ghc " << to_string(report.overall) << "\n";
    for (const auto& f : report.failures)
        out << "fail " << f.degree << " " << f.step << " " << f.dim_coniveau << " "
            << f.dim_level << "\n";
    return out.str();
}

std::string machine_compare(const MotivicClass& truncated_difference, bool equal) {
    std::string out = equal ? "compare equal\n" : "compare unequal\n";
    return out + machine_mc(truncated_difference);
}

std::string machine_transfer(const TransferReport& report) {
    std::ostringstream out;
    out << "transfer " << (report.established ? "valid" : "none") << "\n";
    out << "class " << (report.classes_equal ? "equal" : "unequal") << "\n";
    std::istringstream left(machine_ghc(report.left));
    std::string line;
    while (std::getline(left, line))
        out << "left " << line << "\n";
    std::istringstream right(machine_ghc(report.right));
    while (std::getline(right, line))
        out << "right " << line << "\n";
    return out.str();
}

namespace {

void append_report_body(std::ostringstream& out, const GhcReport& report) {
    out << "fp coniveau: " << to_string(report.fp_coniveau) << "\n";
    out << "fp level:    " << to_string(report.fp_level) << "\n";
    for (const auto& f : report.failures)
        out << "fail: i=" << f.degree << " p=" << f.step
            << " dim(N^p cap H^i)=" << f.dim_coniveau << " dim(level^p cap H^i)=" << f.dim_level
            << "\n";
    for (const auto& [i, p] : report.mixed_sign_cells)
        out << "note: coefficient at (i=" << i << ",p=" << p
            << ") mixes contributions of both signs from several generators; the per-cell "
               "dimension reading is ambiguous\n";
    if (report.heuristic)
        out << "warning: tensor-heuristic input; composite classes are placed at their least "
               "Hodge index, which is only a lower bound on the level filtration. Verdict not "
               "certified.\n";
}

}  // namespace

std::string text_ghc(const GhcReport& report) {
    std::ostringstream out;
    out << "verdict: " << to_string(report.overall) << "\n";
    append_report_body(out, report);
    return out.str();
}

std::string text_compare(const MotivicClass& truncated_difference, bool equal, int precision) {
    std::ostringstream out;
    if (equal) {
        out << "equal modulo F^" << precision << "\n";
    } else {
        out << "not identified modulo F^" << precision
            << " (normal forms differ in the computable fragment)\n";
        out << "difference: " << to_string(truncated_difference) << "\n";
    }
    return out.str();
}

std::string text_transfer(const TransferReport& report, const MotivicClass& left,
                          const MotivicClass& right) {
    std::ostringstream out;
    out << "left:  " << to_string(left) << "\n";
    out << "right: " << to_string(right) << "\n";
    if (!report.classes_equal) {
        out << "classes not identified modulo F^" << report.precision
            << "; no transfer established\n";
        out << "difference: " << to_string(report.truncated_difference) << "\n";
        return out.str();
    }
    out << "classes equal modulo F^" << report.precision << "\n";
    out << "filtered Poincare polynomials agree in t-degrees > " << -report.precision
        << " (coniveau: " << (report.fp_coniveau_agree ? "yes" : "NO")
        << ", level: " << (report.fp_level_agree ? "yes" : "NO") << ")\n";
    out << "criterion verdicts coincide in that range: "
        << (report.verdicts_coincide ? "yes" : "NO") << "\n";
    out << "transfer " << (report.established ? "valid" : "not established")
        << ": a criterion verdict for either class applies to the other in t-degrees > "
        << -report.precision << "\n";
    out << "--- left report ---\n";
    out << text_ghc(report.left);
    out << "--- right report ---\n";
    out << text_ghc(report.right);
    return out.str();
}

}  // namespace mhc
