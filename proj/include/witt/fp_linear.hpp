#pragma once

#include <optional>
#include <vector>

namespace witt {

// Lexicographically least x in F_p^n with A x = rhs, if any. A is rows x n.
std::optional<std::vector<long>> solve_lex_least_mod_p(std::vector<std::vector<long>> a,
                                                      std::vector<long> rhs, long p);

// Dimension of the column span of A over F_p.
int rank_mod_p(std::vector<std::vector<long>> a, long p);

}  // namespace witt
