#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

namespace witt {

// Q(zeta_n), n = q^k, in the power basis 1, zeta, ..., zeta^{d-1}.
struct CycloShape {
  long q = 2;
  int k = 1;
  long n = 2;
  int d = 1;

  CycloShape() = default;
  CycloShape(long q_, int k_);
  bool operator==(const CycloShape&) const = default;
};

using QVec = std::vector<mpq_class>;
using ZVec = std::vector<mpz_class>;

// Reduce a polynomial in zeta (any length) modulo Phi_n.
template <class T>
std::vector<T> cyclo_reduce(std::vector<T> a, const CycloShape& s) {
  const long block = s.n / s.q;
  for (long e = static_cast<long>(a.size()) - 1; e >= s.d; --e) {
    if (a[e] == 0) continue;
    T c = a[e];
    a[e] = 0;
    // zeta^d = -sum_{j<q-1} zeta^{j*block}
    for (long j = 0; j < s.q - 1; ++j) a[e - s.d + j * block] -= c;
  }
  a.resize(s.d);
  return a;
}

template <class T>
std::vector<T> cyclo_mul(const std::vector<T>& a, const std::vector<T>& b, const CycloShape& s) {
  std::vector<T> out(2 * s.d - 1);
  for (int i = 0; i < s.d; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < s.d; ++j) {
      if (b[j] == 0) continue;
      out[i + j] += a[i] * b[j];
    }
  }
  return cyclo_reduce(std::move(out), s);
}

QVec zeta_power(const CycloShape& s, long j);

// v_p on Q(zeta_{p^k}): unique prime above p, uniformizer 1 - zeta.
class PiValuation {
 public:
  PiValuation(const CycloShape& s, long p);
  // Exact v_p(a) as a rational with denominator dividing d; a nonzero.
  mpq_class val(const QVec& a) const;
  // v_pi of a p-integral vector, capped at `cap` steps.
  long pi_val_integral(QVec a, long cap) const;
  const QVec& pi_inverse() const { return inv_; }

 private:
  CycloShape s_;
  long p_;
  QVec inv_;
};

}  // namespace witt
