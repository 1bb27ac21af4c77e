#pragma once

#include <string>
#include <vector>

#include "witt/arrow.hpp"
#include "witt/rings/mod_pm.hpp"
#include "witt/rings/perf_poly.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

// Coherent p-power root sequence (x_{p^{-m}})_{m=0..D} over Z[zeta]/p^M.
struct TiltElt {
  std::vector<Trunc> seq;
};

// Finite-depth tilt of Z[zeta_{p^k}]/p^M. Addition realises the limit
// lim_l (x_{p^{-m-l}} + y_{p^{-m-l}})^{p^l} at l = min(M, D - m).
class TiltRing {
 public:
  using Elem = TiltElt;

  TiltRing(IntegersModPM base, int depth);
  const IntegersModPM& base() const { return base_; }
  int depth() const { return depth_; }
  long prime() const { return base_.prime(); }
  Capabilities caps() const;
  std::string name() const;
  bool operator==(const TiltRing& o) const { return base_ == o.base_ && depth_ == o.depth_; }

  Elem zero() const { return from_int(0); }
  Elem one() const { return from_int(1); }
  Elem from_int(const mpz_class& n) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool equal(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const;
  // |x| = |x_{p^{-m}}|^{p^m} at the first m where the entry is visible
  ExtNorm norm(const Elem& a) const;
  std::string format(const Elem& a) const;
  // "[a0; a1; ...; aD]" or a single base element taken as x_{p^{-D}}
  Elem parse(const std::string& s) const;

  // Validates x_{p^{-m-1}}^p = x_{p^{-m}} at precision.
  Elem make(std::vector<Trunc> seq) const;
  // x_{p^{-D}} = top, lower terms by p-th powers
  Elem from_top(const Trunc& top) const;
  Elem frobenius(const Elem& a) const;
  // (x_{p^{-1}}, ..., x_{p^{-D}}), an element of shallower()
  Elem inverse_frobenius(const Elem& a) const;
  TiltRing shallower() const;

 private:
  IntegersModPM base_;
  int depth_;
};

// sup_j p^{-bj} |x_{p^j}|^{p^{-j}}; b = 0 is allowed here.
template <NormedRing R>
ExtNorm charp_growth(const WittVec<R>& x, const mpq_class& b) {
  if (b < 0) fail(ErrorKind::BOutOfRange, "growth parameter must be nonnegative");
  const long p = x.ring().prime();
  ExtNorm s;
  for (int j = 0; j <= x.length_exponent(); ++j)
    s = max(s, x.ring().norm(x[j]).pow(mpq_class(mpz_class(1), ipow(p, j))).scaled(b * j));
  return s;
}

template <NormedRing R>
ExtNorm charp_overconv_norm(const WittVec<R>& x, const mpq_class& b) {
  if (!x.ring().caps().char_p_perfect)
    fail(ErrorKind::CapabilityMissing, x.ring().name() + " is not perfect of characteristic p");
  if (b <= 0) fail(ErrorKind::BOutOfRange, "b must be positive");
  return charp_growth(x, b);
}

struct DlzReport {
  bool degree_condition = false;  // deg f_{p^j} <= C j p^j + D p^j for all stored j
  bool norm_condition = false;    // sup_j p^{-Cj} |f_{p^j}|^{p^{-j}} <= p^D
};

DlzReport dlz_classify(const WittVec<PerfPolyRing>& x, long C, long D);

// sum_n p^n ([x_{p^n, p^{-m-n}}])_m truncated at depth N
ArrowElt<IntegersModPM> untilt(const WittVec<TiltRing>& x, int depth);

struct UntiltNorms {
  ArrowNorm arrow;
  ExtNorm charp;
};

// Both sides of the isometry; only 0 < b <= 1 is accepted.
UntiltNorms untilt_norms(const WittVec<TiltRing>& x, int depth, const mpq_class& b);

}  // namespace witt
