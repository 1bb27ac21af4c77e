#include "witt/cyclo.hpp"

#include "witt/error.hpp"
#include "witt/gmp_util.hpp"

namespace witt {

CycloShape::CycloShape(long q_, int k_) : q(q_), k(k_) {
  if (q < 2 || k < 1) fail(ErrorKind::MalformedConfig, "bad cyclotomic conductor");
  n = 1;
  for (int i = 0; i < k; ++i) n *= q;
  d = static_cast<int>(n / q * (q - 1));
}

QVec zeta_power(const CycloShape& s, long j) {
  j %= s.n;
  if (j < 0) j += s.n;
  QVec v(std::max<long>(j + 1, s.d));
  v[j] = 1;
  return cyclo_reduce(std::move(v), s);
}

PiValuation::PiValuation(const CycloShape& s, long p) : s_(s), p_(p) {
  if (s.q != p) fail(ErrorKind::UnsupportedInstance, "pi-adic valuation needs conductor a power of p");
  // 1/(1 - zeta) = -(1/n) sum_j j zeta^j
  QVec acc(s.d);
  for (long j = 1; j < s.n; ++j) {
    QVec z = zeta_power(s, j);
    for (int i = 0; i < s.d; ++i) acc[i] += z[i] * j;
  }
  for (auto& c : acc) c = -c / s.n;
  inv_ = acc;
}

long PiValuation::pi_val_integral(QVec a, long cap) const {
  long v = 0;
  while (v < cap) {
    QVec b = cyclo_mul(a, inv_, s_);
    for (const auto& c : b)
      if (!is_p_integral(c, p_)) return v;
    a = std::move(b);
    ++v;
  }
  return v;
}

mpq_class PiValuation::val(const QVec& a) const {
  long c = 0;
  bool any = false;
  for (const auto& x : a) {
    if (x == 0) continue;
    long v = vp(x, p_);
    if (!any || v < c) c = v;
    any = true;
  }
  if (!any) fail(ErrorKind::Unsupported, "valuation of zero");
  QVec b = a;
  mpq_class scale = (c >= 0) ? mpq_class(1, 1) : mpq_class(ipow(p_, -c));
  if (c > 0) scale = mpq_class(mpz_class(1), ipow(p_, c));
  for (auto& x : b) x *= scale;
  long k = pi_val_integral(std::move(b), s_.d);
  return mpq_class(c * s_.d + k, s_.d);
}

}  // namespace witt
