#include "witt/sampling.hpp"

#include "witt/gmp_util.hpp"

namespace witt {

long uniform(Rng& g, long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(g); }

namespace {
mpq_class small_rational(long p, Rng& g) {
  long num = uniform(g, -12, 12);
  long den = uniform(g, 1, 6);
  mpq_class q(num, den);
  q.canonicalize();
  int shift = static_cast<int>(uniform(g, -2, 2));
  if (shift > 0) q *= mpq_class(ipow(p, shift));
  if (shift < 0) q /= mpq_class(ipow(p, -shift));
  return q;
}
}  // namespace

mpz_class sample(const Integers& r, Rng& g) {
  mpz_class v = uniform(g, -40, 40);
  return v * ipow(r.prime(), static_cast<unsigned long>(uniform(g, 0, 2)));
}

mpq_class sample(const Rationals& r, Rng& g) { return small_rational(r.prime(), g); }

QVec sample(const CyclotomicField& r, Rng& g) {
  QVec v(r.degree());
  for (auto& c : v)
    if (uniform(g, 0, 2) > 0) c = small_rational(r.prime(), g);
  return v;
}

Gauss sample(const GaussianField& r, Rng& g) {
  return {small_rational(r.prime(), g), uniform(g, 0, 2) ? small_rational(r.prime(), g) : mpq_class(0)};
}

Trunc sample(const IntegersModPM& r, Rng& g) {
  ZVec c(r.degree());
  const mpz_class& m = r.modulus(r.digits());
  for (auto& x : c) {
    x = uniform(g, 0, m.fits_slong_p() ? m.get_si() - 1 : 1000000);
    x = mod_nonneg(x, m);
  }
  return r.from_coeffs(c, r.digits());
}

PerfPoly sample(const PerfPolyRing& r, Rng& g) {
  PerfPoly out;
  int terms = static_cast<int>(uniform(g, 0, 3));
  for (int t = 0; t < terms; ++t) {
    std::vector<mpq_class> e(r.vars());
    for (auto& x : e) {
      mpq_class q(uniform(g, 0, 3 * r.denominator()), r.denominator());
      q.canonicalize();
      x = q;
    }
    out = r.add(out, r.monomial(uniform(g, 1, r.prime() - 1), e));
  }
  return out;
}

}  // namespace witt
