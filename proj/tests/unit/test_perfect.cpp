#include "doctest.h"
#include "witt/sampling.hpp"
#include "witt/witt.hpp"
#include "../support/oracles.hpp"

using namespace witt;

namespace {

std::vector<mpz_class> coeffs(const Trunc& t) { return t.c; }

// b^p = target (mod p^e) in Z[zeta_{p^k}], recomputed without the library's ring code
bool pth_power_is(const Trunc& b, const std::vector<mpz_class>& target, long p, int k, int e) {
  mpz_class mod = ipow(p, e);
  auto lhs = oracle::zpoly_pow(coeffs(b), p, p, k, mod);
  auto rhs = oracle::zpoly_reduce(target, p, k, mod);
  return lhs == rhs;
}

std::vector<mpz_class> times(const Trunc& a, long c) {
  std::vector<mpz_class> out = a.c;
  for (auto& x : out) x *= c;
  return out;
}

template <class R>
WittVec<R> random_vec(const R& r, Rng& g, int n) {
  std::vector<typename R::Elem> c;
  for (int i = 0; i <= n; ++i) c.push_back(sample(r, g));
  return WittVec<R>(r, c);
}

}  // namespace

TEST_CASE("integers are not Witt-perfect") {
  for (long p : {2L, 3L, 5L}) {
    auto v = witt_perfect_test(p, 0);
    CHECK(v.verdict() == "no");
    CHECK(v.failed_condition == 2);
    REQUIRE(v.counterexample);
    CHECK(v.counterexample->c[0] == 1);
    // no b mod p^2 at all with b^p = p (mod p^2)
    for (long b = 0; b < p * p; ++b) CHECK(mpz_class(ipow(mpz_class(b), p) - p) % (p * p) != 0);
    for (const auto& w : v.witnesses)
      CHECK(pth_power_is(w.b, w.condition == 1 ? w.a.c : times(w.a, p), p, 0, w.condition));
  }
}

TEST_CASE("Z[zeta_8] and Z[zeta_3]") {
  IntegersModPM r(2, 2, 3);
  auto b = root_of_pa(2, 3, r.one());
  REQUIRE(b);
  CHECK(pth_power_is(*b, {2, 0, 0, 0}, 2, 3, 2));
  Trunc sqrt2 = r.add(r.zeta(1), r.zeta(7));
  CHECK(pth_power_is(sqrt2, {2, 0, 0, 0}, 2, 3, 2));
  auto v8 = witt_perfect_test(2, 3);
  CHECK(v8.verdict() == "no");
  CHECK(v8.failed_condition == 1);

  auto v3 = witt_perfect_test(3, 1);
  CHECK(v3.verdict() == "no");
  CHECK(v3.failed_condition == 1);
  REQUIRE(v3.counterexample);
  // nothing cubes to the counterexample mod 3
  for (long b0 = 0; b0 < 3; ++b0)
    for (long b1 = 0; b1 < 3; ++b1) {
      IntegersModPM r3(3, 1, 1);
      Trunc bb = r3.from_coeffs({b0, b1}, 1);
      CHECK_FALSE(pth_power_is(bb, v3.counterexample->c, 3, 1, 1));
    }
}

TEST_CASE("cyclotomic tower is Witt-perfect up to level k") {
  for (int k = 0; k <= 2; ++k) {
    auto v = witt_perfect_tower_test(2, 2, k);
    CHECK(v.verdict() == "yes-up-to-level-" + std::to_string(k));
    for (const auto& w : v.witnesses) {
      const int up = static_cast<int>(std::log2(w.b.c.size())) + 1;
      std::vector<mpz_class> a(w.a.c);
      // embed the level below: zeta -> zeta^2
      std::vector<mpz_class> big(2 * a.size());
      for (size_t i = 0; i < a.size(); ++i) big[2 * i] = a[i] * (w.condition == 2 ? 2 : 1);
      CHECK(pth_power_is(w.b, big, 2, up, w.condition));
    }
  }
  CHECK(witt_perfect_tower_test(3, 2, 0).verdict() == "yes-up-to-level-0");
  CHECK_THROWS_AS(witt_perfect_tower_test(3, 1, 0), Error);
}

TEST_CASE("root sequences") {
  CHECK(build_root_sequence(2, 0).size() == 0);
  for (long p : {2L, 3L}) {
    const int len = p == 2 ? 4 : 2;
    auto seq = build_root_sequence(p, len);
    for (int k = 1; k <= len; ++k) {
      mpq_class v = oracle::norm_oracle_val(seq.field(k), seq.x(k));
      CHECK(v == mpq_class(mpz_class(1), ipow(p, k)));
      CHECK(seq.field(k).norm(seq.x(k)) == ExtNorm::from_val(v));
    }
  }
  auto seq = build_root_sequence(2, 3);
  std::vector<CyclotomicField> fields{seq.field(1), seq.field(2)};
  QVec bad = seq.x(2);
  bad[1] += 1;
  CHECK_THROWS_AS(RootSequence(2, fields, {seq.x(1), bad}), Error);
}

TEST_CASE("power ideals") {
  auto seq = build_root_sequence(2, 3);
  Rng g(4);
  for (int n = 1; n <= 3; ++n) {
    const CyclotomicField& f = seq.field(n);
    for (long m = 1; m <= (1L << n); ++m) {
      std::vector<QVec> samples{power(f, seq.x(n), static_cast<unsigned long>(m)), f.from_int(2), f.one()};
      for (int t = 0; t < 10; ++t) {
        QVec x(f.degree());
        for (auto& c : x) c = uniform(g, -3, 3);
        long e = uniform(g, 0, 3);
        samples.push_back(f.mul(x, power(f, f.sub(f.one(), f.zeta(1)), static_cast<unsigned long>(e))));
      }
      auto rep = power_ideal_check(seq, n, m, samples);
      for (const auto& s : rep) CHECK(s.consistent);
      CHECK(rep[0].in_ideal);
      CHECK(rep[1].in_ideal);
      CHECK_FALSE(rep[2].in_ideal);
      CHECK_FALSE(rep[2].power_in_ideal);
    }
  }
}

TEST_CASE("solve_frobenius examples") {
  IntegersModPM r(2, 5);
  auto y = solve_frobenius(WittVec<IntegersModPM>(r, {r.from_int(2)}));
  CHECK(to_string(y) == "W(p=2; 0, 1 (mod 2^4))");
  auto z = solve_frobenius(witt_zero(r, 2));
  CHECK(is_zero(z));
  IntegersModPM r3(3, 4);
  auto t = solve_frobenius(teichmuller(r3, r3.from_int(8), 0));
  CHECK(frobenius(t) == teichmuller(r3, r3.from_int(8), 0));
  CHECK_THROWS_AS(solve_frobenius(witt_zero(IntegersModPM(2, 2), 1)), Error);
}

TEST_CASE("solve_frobenius round trip") {
  Rng g(17);
  struct Inst {
    long p;
    int M, k;
  };
  for (auto [p, M, k] : {Inst{2, 6, 0}, Inst{3, 5, 0}, Inst{2, 5, 2}, Inst{3, 4, 1}}) {
    IntegersModPM r(p, M, k);
    for (int t = 0; t < 40; ++t) {
      int n = static_cast<int>(uniform(g, 0, std::min(M - 2, 3)));
      auto x = frobenius(random_vec(r, g, n + 1));
      auto y = solve_frobenius(x);
      CHECK(y.length_exponent() == n + 1);
      CHECK(frobenius(y) == x);
      for (const auto& c : y.components()) CHECK(c.prec >= M - n - 1);
    }
  }
}

TEST_CASE("solve_frobenius_normed") {
  auto seq = build_root_sequence(2, 4);
  CyclotomicField qi(2, 2, 2);
  WittVec<CyclotomicField> two(qi, {qi.from_int(2)});
  auto sol = solve_frobenius_normed(two, seq);
  CHECK(sol.y.length_exponent() == 1);
  CHECK(witt_norm(sol.y).pow(2) <= witt_norm(two));

  // F([p^k] y) = [p^{pk}] F(y)
  Rng g(23);
  for (int t = 0; t < 10; ++t) {
    auto y = random_vec(qi, g, 2);
    for (long k : {-1L, 1L, 2L}) {
      QVec pk = qi.from_rational(k > 0 ? mpq_class(ipow(2, k)) : mpq_class(1, 2));
      CHECK(frobenius(teichmuller_scale(pk, y)) == teichmuller_scale(power(qi, pk, 2ul), frobenius(y)));
    }
  }

  for (int t = 0; t < 12; ++t) {
    auto x = random_vec(qi, g, t % 2);
    auto s = solve_frobenius_normed(x, seq);
    const CyclotomicField& f = s.y.ring();
    std::vector<QVec> xc;
    for (const auto& c : x.components()) xc.push_back(f.embed(qi, c));
    CHECK(frobenius(s.y) == WittVec<CyclotomicField>(f, xc));
    CHECK(witt_norm(s.y).pow(2) <= witt_norm(x));
  }
}
