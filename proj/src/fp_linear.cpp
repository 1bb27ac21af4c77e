#include "witt/fp_linear.hpp"

namespace witt {

namespace {
long md(long a, long p) {
  a %= p;
  return a < 0 ? a + p : a;
}

long inv_mod(long a, long p) {
  long r = 1, b = md(a, p), e = p - 2;
  while (e > 0) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r;
}

// Row reduction choosing pivots from the highest column down, so that free
// variables are the low-index ones.
int reduce(std::vector<std::vector<long>>& a, std::vector<long>* rhs, std::vector<int>& pivot_col, long p) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows ? static_cast<int>(a[0].size()) : 0;
  int rank = 0;
  for (int c = cols - 1; c >= 0 && rank < rows; --c) {
    int piv = rank;
    while (piv < rows && md(a[piv][c], p) == 0) ++piv;
    if (piv == rows) continue;
    std::swap(a[piv], a[rank]);
    if (rhs) std::swap((*rhs)[piv], (*rhs)[rank]);
    long inv = inv_mod(a[rank][c], p);
    for (auto& x : a[rank]) x = md(x * inv, p);
    if (rhs) (*rhs)[rank] = md((*rhs)[rank] * inv, p);
    for (int r = 0; r < rows; ++r) {
      if (r == rank) continue;
      long f = md(a[r][c], p);
      if (f == 0) continue;
      for (int j = 0; j < cols; ++j) a[r][j] = md(a[r][j] - f * a[rank][j], p);
      if (rhs) (*rhs)[r] = md((*rhs)[r] - f * (*rhs)[rank], p);
    }
    pivot_col.push_back(c);
    ++rank;
  }
  return rank;
}
}  // namespace

std::optional<std::vector<long>> solve_lex_least_mod_p(std::vector<std::vector<long>> a,
                                                      std::vector<long> rhs, long p) {
  const int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  std::vector<int> pivots;
  int rank = reduce(a, &rhs, pivots, p);
  for (size_t r = rank; r < rhs.size(); ++r)
    if (md(rhs[r], p) != 0) return std::nullopt;
  std::vector<long> x(cols, 0);
  for (int r = 0; r < rank; ++r) x[pivots[r]] = md(rhs[r], p);
  return x;
}

int rank_mod_p(std::vector<std::vector<long>> a, long p) {
  std::vector<int> pivots;
  return reduce(a, nullptr, pivots, p);
}

}  // namespace witt
