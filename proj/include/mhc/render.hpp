#ifndef MHC_RENDER_HPP
#define MHC_RENDER_HPP

#include <string>

#include "mhc/ghc.hpp"

// Machine-format rendering. One line per datum, deterministic and
// byte-identical across runs:
//   fp <i> <p> <coef>            sorted by (i,p)
//   gr <i> <p> <coef>            raw graded dump, same sorting
//   mc <lexp> <symbols-or-1> <coef>
//   ghc <verdict> then fail <i> <p> <dimN> <dimLevel> lines
// The zero class renders as the single line "0".

namespace mhc {

std::string machine_fp(const FPPolynomial& f, const char* tag = "fp");
std::string machine_mc(const MotivicClass& x);
std::string machine_ghc(const GhcReport& report);
std::string machine_compare(const MotivicClass& truncated_difference, bool equal);
std::string machine_transfer(const TransferReport& report);

std::string text_ghc(const GhcReport& report);
std::string text_compare(const MotivicClass& truncated_difference, bool equal, int precision);
std::string text_transfer(const TransferReport& report, const MotivicClass& left,
                          const MotivicClass& right);

}  // namespace mhc

#endif
