#pragma once

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

namespace witt {

// A monomial c * v1^e1 * v2^e2 ... with rational coefficient and exponents.
struct ParsedTerm {
  mpq_class coeff;
  std::map<std::string, mpq_class> exps;
};

// Parses sums like "3/2 - z^3 + 2*z", "x1^(1/2)*x2 + 1", "1+2i", "[1, 0, -1]"
// (a bracketed list is read as coefficients of var^0, var^1, ...).
std::vector<ParsedTerm> parse_terms(const std::string& text, const std::string& list_var);

}  // namespace witt
