#include <set>

#include "doctest.h"
#include "witt/sampling.hpp"
#include "witt/witt.hpp"
#include "../support/oracles.hpp"

using namespace witt;

namespace {

// All coherent sequences over Z/p^M: 4-tuples filtered by x_{m+1}^p = x_m, no library arithmetic.
std::vector<TiltElt> all_sequences(const TiltRing& t) {
  const IntegersModPM& r = t.base();
  const long q = mpz_class(r.modulus(r.digits())).get_si();
  const long p = r.prime();
  const int D = t.depth();
  std::vector<TiltElt> out;
  std::vector<long> x(D + 1, 0);
  while (true) {
    bool ok = true;
    for (int m = 0; m < D && ok; ++m) {
      mpz_class pw = ipow(mpz_class(x[m + 1]), p);
      ok = mod_nonneg(pw - x[m], q) == 0;
    }
    if (ok) {
      TiltElt e;
      for (long v : x) e.seq.push_back(r.from_int(v));
      out.push_back(t.make(e.seq));
    }
    int k = 0;
    while (k <= D && ++x[k] == q) x[k++] = 0;
    if (k > D) break;
  }
  return out;
}

// Tilt of Z/p^M is F_p: the class of x is x_D mod p, and x_1 is its Teichmueller lift.
long residue(const TiltElt& x, long p) { return mod_nonneg(x.seq.back().c[0], p).get_si(); }

mpz_class teich(long c, long p, int M) {
  mpz_class q = ipow(p, M);
  return mod_nonneg(ipow(mpz_class(c), static_cast<unsigned long>(mpz_class(q).get_ui())), q);
}

TiltElt random_tilt(const TiltRing& t, Rng& g) {
  const IntegersModPM& r = t.base();
  Trunc top = sample(r, g);
  long e = uniform(g, 0, 2);
  for (long i = 0; i < e; ++i) top = r.mul(top, r.sub(r.zeta(1), r.one()));
  return t.from_top(top);
}

}  // namespace

TEST_CASE("tilt ring laws, exhaustive") {
  struct Inst {
    long p;
    int M, D;
  };
  for (auto [p, M, D] : {Inst{2, 3, 3}, Inst{3, 2, 2}}) {
    TiltRing t(IntegersModPM(p, M), D);
    auto all = all_sequences(t);
    CHECK(all.size() == static_cast<size_t>(ipow(p, M).get_si()));
    for (const auto& a : all) {
      CHECK(t.equal(t.add(a, t.zero()), a));
      CHECK(t.equal(t.mul(a, t.one()), a));
      TiltElt s = t.zero();
      for (long i = 0; i < p; ++i) s = t.add(s, a);
      CHECK(t.is_zero(s));
      for (const auto& b : all) {
        TiltElt sum = t.add(a, b), prod = t.mul(a, b);
        CHECK(t.equal(sum, t.add(b, a)));
        CHECK(t.equal(prod, t.mul(b, a)));
        // addition is F_p addition, landing on the Teichmueller representative
        long cs = (residue(a, p) + residue(b, p)) % p;
        CHECK(residue(sum, p) == cs);
        CHECK(sum.seq[0].c[0] == teich(cs, p, M));
        CHECK(residue(prod, p) == residue(a, p) * residue(b, p) % p);
        for (const auto& c : all) {
          CHECK(t.equal(t.add(t.add(a, b), c), t.add(a, t.add(b, c))));
          CHECK(t.equal(t.mul(t.mul(a, b), c), t.mul(a, t.mul(b, c))));
          CHECK(t.equal(t.mul(a, t.add(b, c)), t.add(prod, t.mul(a, c))));
        }
      }
    }
  }
}

TEST_CASE("tilt over a cyclotomic base") {
  Rng g(3);
  struct Inst {
    long p;
    int M, k, D;
  };
  for (auto [p, M, k, D] : {Inst{2, 3, 2, 4}, Inst{3, 2, 1, 3}, Inst{2, 4, 3, 5}}) {
    TiltRing t(IntegersModPM(p, M, k), D);
    for (int it = 0; it < 30; ++it) {
      auto a = random_tilt(t, g), b = random_tilt(t, g), c = random_tilt(t, g);
      TiltElt s = t.zero();
      for (long i = 0; i < p; ++i) s = t.add(s, a);
      CHECK(t.is_zero(s));
      CHECK(t.equal(t.sub(a, a), t.zero()));
      CHECK(t.equal(t.add(t.add(a, b), c), t.add(a, t.add(b, c))));
      CHECK(t.equal(t.mul(a, t.add(b, c)), t.add(t.mul(a, b), t.mul(a, c))));
      // outputs stay coherent
      CHECK_NOTHROW(t.make(t.add(a, b).seq));
      CHECK_NOTHROW(t.make(t.mul(a, b).seq));
      // power-multiplicative: |x^p| = |x|^p, read off the shifted entries directly
      TiltElt fp = t.frobenius(a);
      CHECK(t.equal(fp, power(t, a, static_cast<unsigned long>(p))));
      // a product drops below precision exactly when its valuation reaches p^D M
      const mpq_class horizon = mpq_class(ipow(p, D) * M);
      if (t.is_zero(fp))
        CHECK((t.norm(a).is_zero() || t.norm(a).val() * p >= horizon));
      else
        CHECK(t.norm(fp) == t.norm(a).pow(p));
      ExtNorm ab = t.norm(a) * t.norm(b);
      TiltElt prod = t.mul(a, b);
      if (t.is_zero(prod))
        CHECK((ab.is_zero() || ab.val() >= horizon));
      else
        CHECK(t.norm(prod) == ab);
    }
  }
  TiltRing t(IntegersModPM(2, 3, 2), 3);
  CHECK(t.norm(t.one()) == ExtNorm::one());
  CHECK(t.norm(t.zero()) == ExtNorm::zero());
  // (zeta_4 - 1) has valuation 1/2, so its 8th root's sequence has norm 2^{-4}
  auto pi = t.from_top(t.base().sub(t.base().zeta(1), t.base().one()));
  CHECK(t.norm(pi) == ExtNorm::from_val(4));
  CHECK_THROWS_AS(t.make({t.base().one(), t.base().zeta(1), t.base().one(), t.base().one()}), Error);
  CHECK(t.equal(t.parse(t.format(pi)), pi));
}

TEST_CASE("Frobenius is bijective at matched depth") {
  for (auto [p, M, D] : {std::tuple{2L, 3, 3}, std::tuple{3L, 2, 2}}) {
    TiltRing t(IntegersModPM(p, M), D);
    TiltRing s = t.shallower();
    auto all = all_sequences(t);
    std::set<long> image;
    for (const auto& a : all) {
      TiltElt f = t.frobenius(a);
      image.insert(residue(f, p));
      TiltElt back = t.inverse_frobenius(f);
      TiltElt dropped{std::vector<Trunc>(a.seq.begin(), a.seq.end() - 1)};
      CHECK(s.equal(back, dropped));
      // the other composite, in the shallower ring
      TiltElt up{std::vector<Trunc>(a.seq.begin() + 1, a.seq.end())};
      CHECK(s.equal(s.frobenius(up), dropped));
    }
    CHECK(image.size() == static_cast<size_t>(p));
  }
  CHECK_THROWS_AS(TiltRing(IntegersModPM(2, 2), 0).shallower(), Error);
}

TEST_CASE("characteristic p overconvergent norm") {
  PerfPolyRing r(2, 1, 4);
  auto x = r.monomial(1, {mpq_class(1)});
  for (mpq_class b : {mpq_class(1, 4), mpq_class(1), mpq_class(3)}) {
    CHECK(charp_overconv_norm(teichmuller(r, x, 0), b) == ExtNorm::from_val(-1));
    WittVec<PerfPolyRing> v(r, {x, r.monomial(1, {mpq_class(2)})});
    CHECK(charp_overconv_norm(v, b) == ExtNorm::from_val(-1));
  }
  CHECK_THROWS_AS(charp_overconv_norm(teichmuller(r, x, 0), mpq_class(0)), Error);
  Rationals q(2);
  CHECK_THROWS_AS(charp_overconv_norm(WittVec<Rationals>(q, {mpq_class(1)}), mpq_class(1)), Error);

  // inverse-limit norm of the perfect embedding against the closed formula
  Rng g(11);
  int count = 0;
  for (int it = 0; it < 100; ++it) {
    const int len = static_cast<int>(uniform(g, 0, 3));
    std::vector<PerfPoly> comps;
    for (int i = 0; i <= len; ++i) {
      PerfPoly f;
      const long terms = uniform(g, 0, 3);
      for (long s = 0; s < terms; ++s) f = r.add(f, r.monomial(1, {mpq_class(uniform(g, 0, 12))}));
      comps.push_back(f);
    }
    WittVec<PerfPolyRing> v(r, comps);
    auto arrow = arrow_from_perfect(v, 4);
    for (mpq_class b : {mpq_class(1, 4), mpq_class(1, 2), mpq_class(1), mpq_class(2)}) {
      auto an = arrow_norm(arrow, b);
      CHECK(an.exact);
      CHECK(an.value == charp_overconv_norm(v, b));
      // closed formula by hand: sup_j 2^{-bj} 2^{deg f_j / 2^j}
      std::optional<mpq_class> best;
      for (int j = 0; j <= len; ++j) {
        if (comps[j].empty()) continue;
        mpq_class lg = mpq_class(r.degree(comps[j]) / mpq_class(ipow(2, j))) - b * j;
        if (!best || lg > *best) best = lg;
      }
      CHECK(an.value == (best ? ExtNorm::from_val(-*best) : ExtNorm::zero()));
      ++count;
    }
  }
  CHECK(count == 400);
}

TEST_CASE("degree growth matches the norm condition") {
  PerfPolyRing r(2, 1, 0);
  int families = 0;
  for (long C0 = 0; C0 <= 2; ++C0)
    for (long D0 = 0; D0 <= 2; ++D0)
      for (long bump : {0L, 1L}) {
        // f_j = x^{C0 j 2^j + D0 2^j}, the last one pushed past the boundary when bump = 1
        std::vector<long> degs;
        std::vector<PerfPoly> comps;
        for (int j = 0; j <= 3; ++j) {
          long d = C0 * j * (1L << j) + D0 * (1L << j) + (j == 3 ? bump : 0);
          degs.push_back(d);
          comps.push_back(r.monomial(1, {mpq_class(d)}));
        }
        WittVec<PerfPolyRing> v(r, comps);
        for (long C = 0; C <= 2; ++C)
          for (long D = 0; D <= 2; ++D) {
            bool expect = true;
            for (int j = 0; j <= 3; ++j) expect = expect && degs[j] <= C * j * (1L << j) + D * (1L << j);
            auto rep = dlz_classify(v, C, D);
            CHECK(rep.degree_condition == expect);
            CHECK(rep.norm_condition == rep.degree_condition);
          }
        ++families;
      }
  CHECK(families == 18);
  CHECK(dlz_classify(witt_zero(r, 2), 0, 0).norm_condition);
}

TEST_CASE("untilt examples") {
  IntegersModPM r(2, 4, 2);
  TiltRing t(r, 4);
  const int N = 2;
  auto one = untilt(WittVec<TiltRing>(t, {t.one()}), N);
  CHECK(one == reduce_integers(from_integer(2, 1, N), r));
  auto zero = untilt(witt_zero(t, 1), N);
  for (int n = 0; n <= N; ++n) CHECK(is_zero(project(zero, n)));
  CHECK_THROWS_AS(untilt(witt_zero(t, 3), N), Error);
  auto x = WittVec<TiltRing>(t, {t.one(), t.zero()});
  CHECK_THROWS_AS(untilt_norms(x, N, mpq_class(2)), Error);
  CHECK_THROWS_AS(untilt_norms(x, N, mpq_class(0)), Error);
}

TEST_CASE("untilt is isometric on certified inputs") {
  Rng g(29);
  struct Inst {
    long p;
    int M, k;
  };
  const std::vector<mpq_class> bs{mpq_class(1, 4), mpq_class(1, 2), mpq_class(1)};
  int certified = 0;
  for (auto [p, M, k] : {Inst{2, 4, 2}, Inst{2, 4, 3}, Inst{3, 3, 1}}) {
    IntegersModPM r(p, M, k);
    const int N = 2;
    TiltRing t(r, N + 1);
    int found = 0;
    for (int it = 0; it < 400 && found < 10; ++it) {
      WittVec<TiltRing> x(t, {random_tilt(t, g), random_tilt(t, g)});
      std::vector<UntiltNorms> ns;
      for (const auto& b : bs) ns.push_back(untilt_norms(x, N, b));
      bool all_exact = true;
      for (const auto& n : ns) all_exact = all_exact && n.arrow.exact;
      if (!all_exact) continue;
      for (const auto& n : ns) CHECK(n.arrow.value == n.charp);
      ++found;
    }
    CHECK(found == 10);
    certified += found;
  }
  CHECK(certified == 30);
}

TEST_CASE("theta of an untilt is the classical sharp sum") {
  Rng g(41);
  struct Inst {
    long p;
    int M, k;
  };
  for (auto [p, M, k] : {Inst{2, 4, 2}, Inst{3, 3, 1}}) {
    IntegersModPM r(p, M, k);
    for (int N = 1; N <= 2; ++N) {
      TiltRing t(r, N + 1);
      for (int it = 0; it < 20; ++it) {
        WittVec<TiltRing> x(t, {random_tilt(t, g), random_tilt(t, g)});
        auto y = untilt(x, N);
        // sum_n p^n lift(x_{n, p^{-n-N}})^{p^N}, with integer polynomials
        const int e = std::min(M, N + 1);
        mpz_class mod = ipow(p, e);
        std::vector<mpz_class> acc(r.degree(), 0);
        for (int n = 0; n <= 1; ++n) {
          auto pw = oracle::zpoly_pow(x[n].seq[n + N].c, ipow(p, N).get_si(), p, k, mod);
          for (size_t i = 0; i < acc.size(); ++i) acc[i] += ipow(p, n) * pw[i];
        }
        acc = oracle::zpoly_reduce(acc, p, k, mod);
        Trunc th = theta(y);
        std::vector<mpz_class> got(th.c);
        CHECK(oracle::zpoly_reduce(got, p, k, mod) == acc);
        // ghost form of level N, mod p^{M-N}
        if (M - N >= 1) {
          mpz_class gm = ipow(p, M - N);
          std::vector<mpz_class> gh(ghost(project(y, N))[N].c);
          CHECK(oracle::zpoly_reduce(gh, p, k, gm) == oracle::zpoly_reduce(got, p, k, gm));
        }
      }
    }
  }
}
