#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/ring.hpp"

namespace witt {

// Integer polynomial in x_1, x_p, ..., (nx of them) and y_1, y_p, ... (ny of them).
// A monomial is an exponent vector of size nx + ny, x-variables first.
struct UnivPoly {
  long p = 2;
  int nx = 0;
  int ny = 0;
  std::map<std::vector<unsigned>, mpz_class> terms;
};

// Largest index evaluated through structure polynomials in ring arithmetic.
inline int universal_cap(long p) { return p == 2 ? 3 : 2; }
constexpr int kMaxUniversalIndex = 3;

const UnivPoly& sum_poly(long p, int i);
const UnivPoly& prod_poly(long p, int i);
// f_{p^i} with F(x)_{p^i} = x_{p^i}^p + p x_{p^{i+1}} + p f_{p^i}(x_1..x_{p^i}).
const UnivPoly& frob_poly(long p, int i);
// The whole component F(x)_{p^i}, in x_1 .. x_{p^{i+1}}.
const UnivPoly& frob_component(long p, int i);

// Weighted degree with weight(x_{p^i}) = weight(y_{p^i}) = p^i, if homogeneous.
// `use_x` / `use_y` select which families count toward the weight.
std::optional<long> weighted_degree(const UnivPoly& f, bool use_x = true, bool use_y = true);
bool check_weighted_homogeneity(const UnivPoly& f, long degree);

std::string format(const UnivPoly& f);

template <NormedRing R>
typename R::Elem evaluate(const UnivPoly& f, const R& r, const std::vector<typename R::Elem>& vars) {
  using E = typename R::Elem;
  const size_t n = vars.size();
  std::vector<unsigned> max_exp(n, 0);
  for (const auto& [m, c] : f.terms)
    for (size_t v = 0; v < n && v < m.size(); ++v) max_exp[v] = std::max(max_exp[v], m[v]);
  std::vector<std::vector<E>> pw(n);
  for (size_t v = 0; v < n; ++v) {
    pw[v].push_back(r.one());
    for (unsigned e = 1; e <= max_exp[v]; ++e) pw[v].push_back(r.mul(pw[v].back(), vars[v]));
  }
  E acc = r.zero();
  for (const auto& [m, c] : f.terms) {
    E t = r.from_int(c);
    for (size_t v = 0; v < n && v < m.size(); ++v)
      if (m[v]) t = r.mul(t, pw[v][m[v]]);
    acc = r.add(acc, t);
  }
  return acc;
}

}  // namespace witt
