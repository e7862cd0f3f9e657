#ifndef MHC_PARSER_HPP
#define MHC_PARSER_HPP

#include <string_view>

#include "mhc/ast.hpp"

namespace mhc {

/// Parses the expression language:
///
///   expr   := ['-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := INT | 'L' ['^' '-'? INT] | atom | '(' expr ')'
///   atom   := 'point' | P<digits> | 'curve' '(' INT ')'
///           | 'blowup' '(' atom ',' atom ',' INT ')'
///           | 'prod' '(' atom ',' atom ')' | IDENT
///
/// Whitespace-insensitive, keywords case-sensitive, integer literals must
/// fit in a signed 64-bit value. Throws ParseError with 1-based line/column
/// and the expected-token set; dimension and codimension constraints are
/// checked later, against the registry, with node locations.
RingExpr parse_expression(std::string_view text);

}  // namespace mhc

#endif
