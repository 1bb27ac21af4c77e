#include "doctest.h"
#include "witt/gmp_util.hpp"
#include "witt/sampling.hpp"
#include "witt/witt.hpp"
#include "../support/oracles.hpp"

using namespace witt;

namespace {

// v at the place i -> r, where r^2 = -1 mod 5^k
long split_place_val(const Gauss& x, long k, bool conj) {
  mpz_class mod = ipow(5, k);
  mpz_class r = 2;
  for (int it = 0; it < 20; ++it) {
    // Newton step for r^2 + 1
    mpz_class inv;
    mpz_class two_r = 2 * r;
    mpz_invert(inv.get_mpz_t(), two_r.get_mpz_t(), mod.get_mpz_t());
    r = mod_nonneg(r - (r * r + 1) * inv, mod);
  }
  if (conj) r = mod_nonneg(-r, mod);
  mpz_class a = reduce_rational(x.re, mod), b = reduce_rational(x.im, mod);
  mpz_class v = mod_nonneg(a + b * r, mod);
  return v == 0 ? k : vp(v, 5);
}

}  // namespace

TEST_CASE("rational seminorm and division") {
  Rationals q(2);
  CHECK(q.norm(mpq_class(1, 2)) == ExtNorm::from_val(-1));
  CHECK(q.norm(0).is_zero());
  Integers z(2);
  CHECK(z.divide_by_p(6) == 3);
  CHECK_THROWS_AS(z.divide_by_p(3), Error);
  try {
    z.divide_by_p(3);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotDivisible);
  }
  Integers z3(3);
  auto b = z3.pth_root_mod_p(5);
  REQUIRE(b);
  CHECK(mod_nonneg(ipow(*b, 3) - 5, 3) == 0);
}

TEST_CASE("truncated division drops a digit") {
  IntegersModPM r(2, 4);
  auto y = r.divide_by_p(r.from_int(4));
  CHECK(y.prec == 3);
  CHECK(y.c[0] == 2);
  CHECK_THROWS_AS(r.divide_by_p(r.from_int(3)), Error);
  auto low = r.truncate(r.from_int(2), 1);
  try {
    r.divide_by_p(low);
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::PrecisionExhausted);
  }
}

TEST_CASE("gaussian norms at split, inert and ramified primes") {
  GaussianField g5(5);
  CHECK(g5.norm({1, 1}) == ExtNorm::one());
  CHECK(g5.norm({2, 1}) == ExtNorm::one());
  CHECK(g5.norm({5, 0}) == ExtNorm::from_val(1));
  Rng rng(11);
  for (int t = 0; t < 200; ++t) {
    Gauss x{uniform(rng, -60, 60), uniform(rng, -60, 60)};
    if (g5.is_zero(x)) continue;
    auto vs = g5.place_vals(x);
    long a = split_place_val(x, 12, false), b = split_place_val(x, 12, true);
    CHECK(((vs[0] == a && vs[1] == b) || (vs[0] == b && vs[1] == a)));
  }
  GaussianField g2(2), g3(3);
  CHECK(g2.norm({1, 1}) == ExtNorm::from_val(mpq_class(1, 2)));
  CHECK(g3.norm({3, 6}) == ExtNorm::from_val(1));
  CHECK(g3.norm({1, 3}) == ExtNorm::one());
  for (int t = 0; t < 100; ++t) {
    Gauss x = sample(g2, rng);
    if (g2.is_zero(x)) continue;
    mpq_class n = x.re * x.re + x.im * x.im;
    CHECK(g2.norm(x) == ExtNorm::from_val(mpq_class(vp(n, 2), 2)));
  }
}

TEST_CASE("cyclotomic norm matches the field norm") {
  Rng rng(5);
  for (auto [q, k] : std::vector<std::pair<long, int>>{{2, 3}, {3, 1}, {3, 2}, {2, 4}, {5, 1}}) {
    CyclotomicField f(q, k, q);
    for (int t = 0; t < 40; ++t) {
      QVec x = sample(f, rng);
      if (f.is_zero(x)) continue;
      CHECK(f.norm(x) == ExtNorm::from_val(oracle::norm_oracle_val(f, x)));
    }
    CHECK(f.norm(f.sub(f.one(), f.zeta())) == ExtNorm::from_val(mpq_class(1, f.degree())));
  }
}

TEST_CASE("unramified cyclotomic sup norm") {
  CyclotomicField f(2, 3, 3);
  CHECK(f.norm(f.parse("3z + 9")) == ExtNorm::from_val(1));
  CHECK(f.norm(f.parse("1/3 + z")) == ExtNorm::from_val(-1));
  CHECK_FALSE(f.caps().multiplicative_norm);
  CHECK(f.caps().power_multiplicative_norm);
}

TEST_CASE("norm laws on samples") {
  Rng rng(17);
  auto laws = [&](const auto& r, int n) {
    for (int t = 0; t < n; ++t) {
      auto x = sample(r, rng), y = sample(r, rng);
      CHECK(r.norm(r.add(x, y)) <= max(r.norm(x), r.norm(y)));
      CHECK(r.norm(r.mul(x, y)) <= r.norm(x) * r.norm(y));
      if (r.caps().multiplicative_norm) CHECK(r.norm(r.mul(x, y)) == r.norm(x) * r.norm(y));
      if (r.caps().power_multiplicative_norm)
        for (unsigned e = 2; e <= 8; ++e) CHECK(r.norm(power(r, x, e)) == r.norm(x).pow(e));
    }
  };
  laws(Integers(3), 100);
  laws(Rationals(2), 100);
  laws(GaussianField(5), 100);
  laws(GaussianField(3), 100);
  laws(CyclotomicField(2, 3, 2), 60);
  laws(CyclotomicField(2, 3, 3), 60);
  laws(PerfPolyRing(2, 2, 3), 60);
  laws(IntegersModPM(2, 6), 100);
}

TEST_CASE("perfected polynomial roots") {
  PerfPolyRing r(2, 1, 1);
  auto x = r.parse("x");
  auto root = r.pth_root_mod_p(x);
  REQUIRE(root);
  CHECK(r.format(*root) == "x^(1/2)");
  CHECK(r.equal(r.mul(*root, *root), x));
  PerfPolyRing plain(2, 1, 0);
  CHECK_FALSE(plain.pth_root_mod_p(plain.parse("x")));
  CHECK(r.norm(x) == ExtNorm::from_val(-1));
}

TEST_CASE("cyclotomic truncated p-th roots are lex-least") {
  IntegersModPM r(2, 3, 3);
  auto zero_root = r.pth_root_mod_p(r.zero());
  REQUIRE(zero_root);
  CHECK(r.is_zero(*zero_root));
  // zeta_8 is not a square mod 2
  CHECK_FALSE(r.pth_root_mod_p(r.zeta()));
  auto s = r.pth_root_mod_p(r.zeta(2));
  REQUIRE(s);
  CHECK(r.equal(r.truncate(r.sub(r.mul(*s, *s), r.zeta(2)), 1), r.truncate(r.zero(), 1)));
}

TEST_CASE("parsing") {
  CyclotomicField f(2, 3, 2);
  CHECK(f.format(f.parse("z + z^7")) == "[0, 1, 0, -1]");
  CHECK(f.format(f.parse("[1, 2]")) == "[1, 2, 0, 0]");
  GaussianField g(5);
  CHECK(g.format(g.parse("1/2 - 3i")) == "1/2-3i");
  CHECK_THROWS_AS(g.parse("1 + "), Error);
}
