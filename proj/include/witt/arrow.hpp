#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

#include "witt/rings/mod_pm.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

// Depth-N truncation of an element of the inverse limit along F.
// `tail` bounds |levels[n]|_W^{p^n} for every n > depth when present.
template <NormedRing R>
class ArrowElt {
 public:
  ArrowElt(R ring, std::vector<WittVec<R>> levels, std::optional<ExtNorm> tail = std::nullopt)
      : ring_(std::move(ring)), levels_(std::move(levels)), tail_(std::move(tail)) {
    if (levels_.empty()) fail(ErrorKind::LengthZero, "inverse-limit element needs level 0");
    for (size_t n = 0; n < levels_.size(); ++n) {
      if (!(levels_[n].ring() == ring_)) fail(ErrorKind::RingMismatch, "level ring differs");
      if (levels_[n].length_exponent() != static_cast<int>(n))
        fail(ErrorKind::LengthMismatch, "level " + std::to_string(n) + " has the wrong length");
    }
    for (size_t n = 0; n + 1 < levels_.size(); ++n)
      if (!(frobenius(levels_[n + 1]) == levels_[n]))
        fail(ErrorKind::Incoherent, "F(level " + std::to_string(n + 1) + ") != level " + std::to_string(n));
  }

  const R& ring() const { return ring_; }
  int depth() const { return static_cast<int>(levels_.size()) - 1; }
  const std::vector<WittVec<R>>& levels() const { return levels_; }
  const WittVec<R>& level(int n) const {
    if (n < 0 || n > depth()) fail(ErrorKind::DepthExceeded, "level " + std::to_string(n) + " beyond depth");
    return levels_[n];
  }
  const std::optional<ExtNorm>& tail_bound() const { return tail_; }

 private:
  R ring_;
  std::vector<WittVec<R>> levels_;
  std::optional<ExtNorm> tail_;
};

template <NormedRing R>
bool operator==(const ArrowElt<R>& a, const ArrowElt<R>& b) {
  if (a.depth() != b.depth()) return false;
  for (int n = 0; n <= a.depth(); ++n)
    if (!(a.level(n) == b.level(n))) return false;
  return true;
}

template <NormedRing R>
const WittVec<R>& project(const ArrowElt<R>& a, int n) {
  return a.level(n);
}

// w_{p^{-n}}: the first component of level n.
template <NormedRing R>
typename R::Elem ghost_value(const ArrowElt<R>& a, int n) {
  return a.level(n)[0];
}

// Coherent sequence determined by its top level.
template <NormedRing R>
ArrowElt<R> arrow_from_top(const WittVec<R>& top) {
  std::vector<WittVec<R>> lv{top};
  while (lv.back().length_exponent() > 0) lv.push_back(frobenius(lv.back()));
  std::reverse(lv.begin(), lv.end());
  return ArrowElt<R>(top.ring(), std::move(lv));
}

// The image of m; every level has ghost components (m, ..., m).
template <NormedRing R>
ArrowElt<R> arrow_from_integer(const R& r, const mpz_class& m, int depth) {
  std::vector<WittVec<R>> lv;
  for (int n = 0; n <= depth; ++n) lv.push_back(witt_from_int(r, m, n));
  return ArrowElt<R>(r, std::move(lv), m == 0 ? ExtNorm::zero() : ExtNorm::one());
}

inline ArrowElt<Integers> from_integer(long p, const mpz_class& m, int depth) {
  return arrow_from_integer(Integers(p), m, depth);
}

// Teichmueller sequence ([r_0], [r_1], ...) for roots with r_{n+1}^p = r_n.
template <NormedRing R>
ArrowElt<R> arrow_teichmuller(const R& r, const std::vector<typename R::Elem>& roots) {
  std::vector<WittVec<R>> lv;
  for (size_t n = 0; n < roots.size(); ++n) lv.push_back(teichmuller(r, roots[n], static_cast<int>(n)));
  Capabilities c = r.caps();
  std::optional<ExtNorm> tail;
  // |r_n|^{p^n} = |r_0| needs power-multiplicativity, or a valuation that is visible at precision
  if (c.power_multiplicative_norm || (c.precision && !r.is_zero(roots[0]))) tail = r.norm(roots[0]);
  return ArrowElt<R>(r, std::move(lv), tail);
}

// Over a perfect ring of characteristic p, W(R) embeds with levels (x_i^{p^{-n}})_{i<=n}.
// Components past the stored length are zero, so |x|_W bounds every level.
template <NormedRing R>
ArrowElt<R> arrow_from_perfect(const WittVec<R>& x, int depth) {
  const R& r = x.ring();
  if (!r.caps().char_p_perfect) fail(ErrorKind::CapabilityMissing, r.name() + " is not perfect of characteristic p");
  std::vector<typename R::Elem> cur(x.components());
  cur.resize(depth + 1, r.zero());
  std::vector<WittVec<R>> lv;
  for (int n = 0; n <= depth; ++n) {
    if (n > 0)
      for (auto& c : cur) {
        auto root = r.pth_root(c);
        if (!root) fail(ErrorKind::NoRoot, "no p-th root of " + r.format(c));
        c = *root;
      }
    lv.emplace_back(r, std::vector<typename R::Elem>(cur.begin(), cur.begin() + n + 1));
  }
  return ArrowElt<R>(r, std::move(lv), witt_norm(x));
}

template <NormedRing R>
ArrowElt<R> inverse_frobenius(const ArrowElt<R>& a) {
  if (a.depth() < 1) fail(ErrorKind::ZeroDepth, "inverse Frobenius needs depth >= 1");
  std::vector<WittVec<R>> lv;
  for (int n = 0; n < a.depth(); ++n) lv.push_back(restrict(a.level(n + 1), n));
  std::optional<ExtNorm> tail;
  if (a.tail_bound()) tail = a.tail_bound()->pow(mpq_class(mpz_class(1), mpz_class(a.ring().prime())));
  return ArrowElt<R>(a.ring(), std::move(lv), tail);
}

template <NormedRing R>
ArrowElt<R> truncate_depth(const ArrowElt<R>& a, int depth) {
  if (depth > a.depth()) fail(ErrorKind::DepthExceeded, "cannot extend depth");
  std::vector<WittVec<R>> lv(a.levels().begin(), a.levels().begin() + depth + 1);
  // dropped levels are now part of the tail
  std::optional<ExtNorm> tail = a.tail_bound();
  if (tail) {
    const long p = a.ring().prime();
    mpz_class pn = ipow(p, depth + 1);
    for (int n = depth + 1; n <= a.depth(); ++n, pn *= p)
      tail = max(*tail, witt_norm(a.level(n)).pow(mpq_class(pn)));
  }
  return ArrowElt<R>(a.ring(), std::move(lv), tail);
}

template <NormedRing R>
ArrowElt<R> arrow_add(const ArrowElt<R>& a, const ArrowElt<R>& b) {
  if (a.depth() != b.depth()) fail(ErrorKind::LengthMismatch, "depths differ");
  std::vector<WittVec<R>> lv;
  for (int n = 0; n <= a.depth(); ++n) lv.push_back(add(a.level(n), b.level(n)));
  std::optional<ExtNorm> tail;
  if (a.tail_bound() && b.tail_bound()) tail = max(*a.tail_bound(), *b.tail_bound());
  return ArrowElt<R>(a.ring(), std::move(lv), tail);
}

template <NormedRing R>
ArrowElt<R> arrow_mul(const ArrowElt<R>& a, const ArrowElt<R>& b) {
  if (a.depth() != b.depth()) fail(ErrorKind::LengthMismatch, "depths differ");
  std::vector<WittVec<R>> lv;
  for (int n = 0; n <= a.depth(); ++n) lv.push_back(mul(a.level(n), b.level(n)));
  std::optional<ExtNorm> tail;
  if (a.tail_bound() && b.tail_bound()) tail = *a.tail_bound() * *b.tail_bound();
  return ArrowElt<R>(a.ring(), std::move(lv), tail);
}

template <NormedRing R>
ArrowElt<R> arrow_scale(const ArrowElt<R>& a, const mpz_class& m) {
  return arrow_mul(arrow_from_integer(a.ring(), m, a.depth()), a);
}

struct ArrowNorm {
  ExtNorm value;
  bool exact = false;
  // index attaining the sup among stored levels (-1 for zero)
  int argmax = -1;
};

// Upper bound for |c| where c is only known modulo p^prec.
template <NormedRing R>
ExtNorm norm_upper(const R& r, const typename R::Elem& c) {
  if constexpr (HasIntegralLift<R>) {
    if (r.is_zero(c)) return ExtNorm::from_val(r.precision_of(c));
  }
  return r.norm(c);
}

// sup_n p^{-bn} |levels[n]|_W^{p^n}
// Over precision-truncated rings a component that vanishes at its precision may still be
// nonzero; the value is exact only if those components cannot raise the sup.
template <NormedRing R>
ArrowNorm arrow_norm(const ArrowElt<R>& a, const mpq_class& b) {
  if (b <= 0) fail(ErrorKind::BOutOfRange, "b must be positive");
  const R& r = a.ring();
  const long p = r.prime();
  ArrowNorm out;
  ExtNorm upper;
  mpz_class pn = 1;
  for (int n = 0; n <= a.depth(); ++n, pn *= p) {
    const auto& lv = a.level(n);
    ExtNorm term = witt_norm(lv).pow(mpq_class(pn)).scaled(b * n);
    if (out.argmax < 0 ? !term.is_zero() : term > out.value) {
      out.value = term;
      out.argmax = n;
    }
    ExtNorm hi;
    for (int i = 0; i <= n; ++i) hi = max(hi, norm_upper(r, lv[i]).pow(mpq_class(mpz_class(1), ipow(p, i))));
    upper = max(upper, hi.pow(mpq_class(pn)).scaled(b * n));
  }
  if (a.tail_bound()) {
    ExtNorm tail = a.tail_bound()->scaled(b * (a.depth() + 1));
    out.exact = tail <= out.value && upper == out.value;
  }
  return out;
}

// theta: projection onto level 0.
template <NormedRing R>
typename R::Elem theta(const ArrowElt<R>& a) {
  return a.level(0)[0];
}

// Unique lift of a coherent sequence over Z[zeta]/p^m to Z[zeta]/p^{m+1}, at depth N.
inline ArrowElt<IntegersModPM> lift_mod_p_power(const ArrowElt<IntegersModPM>& a, int target_depth) {
  const IntegersModPM& src = a.ring();
  const int m = src.digits();
  if (a.depth() < target_depth + m + 2)
    fail(ErrorKind::InsufficientDepth, "lifting to depth " + std::to_string(target_depth) + " needs input depth " +
                                           std::to_string(target_depth + m + 2));
  IntegersModPM dst(src.prime(), m + 1, src.level());
  auto lift_level = [&](int j) {
    std::vector<Trunc> c;
    for (const auto& e : a.level(j).components()) c.push_back(dst.with_precision(e, m + 1));
    return WittVec<IntegersModPM>(dst, c);
  };
  std::vector<WittVec<IntegersModPM>> lv;
  for (int i = 0; i <= target_depth + 1; ++i) lv.push_back(frobenius_iter(lift_level(i + m + 1), m + 1));
  if (!(frobenius(lv.back()) == lv[target_depth]))
    fail(ErrorKind::Incoherent, "lifted sequence is not coherent");
  lv.pop_back();
  std::optional<ExtNorm> tail;
  return ArrowElt<IntegersModPM>(dst, std::move(lv), tail);
}

// Reduce a sequence over Z[zeta]/p^{M'} to Z[zeta]/p^M.
inline ArrowElt<IntegersModPM> reduce_digits(const ArrowElt<IntegersModPM>& a, int M) {
  const IntegersModPM& src = a.ring();
  IntegersModPM dst(src.prime(), M, src.level());
  std::vector<WittVec<IntegersModPM>> lv;
  for (const auto& w : a.levels()) {
    std::vector<Trunc> c;
    for (const auto& e : w.components()) c.push_back(dst.with_precision(e, std::min(M, e.prec)));
    lv.emplace_back(dst, c);
  }
  return ArrowElt<IntegersModPM>(dst, std::move(lv), a.tail_bound());
}

// Map an element over Z into Z[zeta]/p^M.
inline ArrowElt<IntegersModPM> reduce_integers(const ArrowElt<Integers>& a, const IntegersModPM& dst) {
  std::vector<WittVec<IntegersModPM>> lv;
  for (const auto& w : a.levels()) {
    std::vector<Trunc> c;
    for (const auto& e : w.components()) c.push_back(dst.from_int(e));
    lv.emplace_back(dst, c);
  }
  return ArrowElt<IntegersModPM>(dst, std::move(lv), a.tail_bound());
}

}  // namespace witt
