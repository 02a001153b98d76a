#pragma once

#include <string>
#include <vector>

#include "staircase/core.hpp"

namespace staircase {

// Parse failure with 1-based position information.
struct parse_error : malformed_input {
  int line = 0;
  int col = 0;
  parse_error(const std::string& msg, int line_, int col_);
};

struct ParsedIdealFile {
  RingSpec ring;
  MonomialIdeal ideal;
  std::vector<std::string> var_names;
};

// Grammar, line oriented; '#' starts a comment, blank lines are ignored:
//   vars: <name>( <name>)*
//   quotient: <monomial>(, <monomial>)*     (optional)
//   ideal: <monomial>(, <monomial>)*
// monomial := factor('*'factor)*; factor := varname('^'positive-decimal)?;
// an omitted exponent means 1. Whitespace around tokens is ignored.
ParsedIdealFile parse_ideal_file(const std::string& text);

std::string format_monomial(const ExponentVector& m, const std::vector<std::string>& names);
// Comma-separated generators; the unit ideal prints as "1".
std::string format_ideal(const MonomialIdeal& a, const std::vector<std::string>& names);
// x, y, z, w, u, v, then t0, t1, ...
std::vector<std::string> default_var_names(int nvars);

}  // namespace staircase
