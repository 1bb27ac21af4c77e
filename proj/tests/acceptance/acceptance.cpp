// One line per criterion: PASS/FAIL, elapsed time, limit.
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "../support/identities.hpp"
#include "../support/oracles.hpp"
#include "witt/sampling.hpp"
#include "witt/suites.hpp"
#include "witt/witt.hpp"

using namespace witt;

namespace {

using Failures = std::vector<std::string>;

struct Expect {
  Failures& out;
  void operator()(bool ok, const std::string& what) {
    if (!ok) out.push_back(what);
  }
};

// Runs a suite restricted to a group; every case must pass and carry at least `min_samples`.
void suite_checks(Failures& f, const std::string& suite, const std::string& group, long min_samples = 1,
                  SuiteConfig cfg = {}) {
  cfg.group = group;
  auto rep = run_suite(suite, cfg);
  if (rep.cases.empty()) f.push_back(suite + "/" + group + ": no cases ran");
  for (const auto& c : rep.cases) {
    if (c.status != CaseStatus::Pass)
      f.push_back(suite + ":" + c.key + " " + status_name(c.status) + " " + c.detail);
    else if (c.samples < min_samples && c.key.find("/certified") == std::string::npos &&
             c.key.find("-count") == std::string::npos)
      f.push_back(suite + ":" + c.key + " only " + std::to_string(c.samples) + " samples");
  }
}

long samples_of(const std::string& suite, const std::string& key, SuiteConfig cfg = {}) {
  cfg.group = key;
  long n = 0;
  for (const auto& c : run_suite(suite, cfg).cases)
    if (c.key == key) n += c.samples;
  return n;
}

template <class R>
WittVec<R> random_vec(const R& r, Rng& g, int n) {
  std::vector<typename R::Elem> c;
  for (int i = 0; i <= n; ++i) c.push_back(sample(r, g));
  return WittVec<R>(r, c);
}

mpq_class canon(long n, long d) {
  mpq_class x(n, d);
  x.canonicalize();
  return x;
}

// ---------------------------------------------------------------- criteria

Failures universal_polynomials() {
  Failures f;
  Expect e{f};
  suite_checks(f, "universal", "");
  for (long p : {2L, 3L, 5L})
    for (int i = 0; i <= universal_cap(p); ++i) {
      const std::string at = " p=" + std::to_string(p) + " i=" + std::to_string(i);
      e(oracle::ghost_identity(p, i, false), "symbolic sum identity" + at);
      e(oracle::ghost_identity(p, i, true), "symbolic product identity" + at);
      e(oracle::frob_identity(p, i), "symbolic Frobenius identity" + at);
      const long pi = ipow(p, i).get_si();
      e(weighted_degree(sum_poly(p, i)) == pi, "sum degree" + at);
      e(weighted_degree(prod_poly(p, i)) == 2 * pi, "product degree" + at);
      e(weighted_degree(frob_component(p, i)) == pi * p, "Frobenius degree" + at);
    }
  return f;
}

Failures witt_axioms() {
  Failures f;
  suite_checks(f, "ghost", "laws", 500);
  suite_checks(f, "ghost", "examples");
  return f;
}

Failures norm_laws() {
  Failures f;
  Expect e{f};
  suite_checks(f, "norms", "bounds", 500);
  // |x|_W over Q(zeta_8) at p = 2 from determinant valuations
  Rng g(101);
  CyclotomicField k(2, 3, 2);
  for (int t = 0; t < 100; ++t) {
    auto x = random_vec(k, g, 2);
    ExtNorm want;
    for (int i = 0; i <= 2; ++i)
      if (!k.is_zero(x[i]))
        want = max(want, ExtNorm::from_val(oracle::norm_oracle_val(k, x[i]) / mpq_class(ipow(2, i))));
    e(witt_norm(x) == want, "Q(zeta_8) Witt norm vs determinant oracle at " + to_string(x));
    e(witt_norm(verschiebung(x)) == want.pow(mpq_class(1, 2)), "|V x| vs oracle at " + to_string(x));
  }
  return f;
}

Failures mult_by_p() {
  Failures f;
  Expect e{f};
  suite_checks(f, "arrow", "mult-by-p");
  e(samples_of("arrow", "mult-by-p/p=2") == 16 && samples_of("arrow", "mult-by-p/p=3") == 16,
    "expected 16 (m, b) pairs per prime");
  return f;
}

Failures lifting() {
  Failures f;
  suite_checks(f, "arrow", "lifting");
  suite_checks(f, "arrow", "from-integer", 17);
  Expect e{f};
  e(samples_of("arrow", "lifting/existence") == 32, "2^5 coherent inputs over Z/2 at depth 4");
  e(samples_of("arrow", "lifting/uniqueness") == 1024, "4^5 coherent sequences over Z/4 at depth 4");
  return f;
}

Failures theta_map() {
  Failures f;
  Expect e{f};
  suite_checks(f, "arrow", "theta", 100);
  // theta of the image of k is k
  Rng g(7);
  for (long p : {2L, 3L}) {
    IntegersModPM r(p, 6);
    for (int t = 0; t < 100; ++t) {
      const long k = uniform(g, -100000, 100000);
      auto a = reduce_integers(from_integer(p, k, 3), r);
      e(theta(a).c[0] == mod_nonneg(k, ipow(p, 6)), "theta of " + std::to_string(k));
    }
  }
  return f;
}

// Lower levels of a top level over Z through ghost components, with no library Witt arithmetic.
std::vector<std::vector<mpz_class>> frobenius_chain_p2(const std::vector<mpz_class>& top) {
  std::vector<std::vector<mpz_class>> chain{top};
  while (chain.back().size() > 1) {
    const auto& x = chain.back();
    const size_t n = x.size();
    std::vector<mpz_class> w(n);
    for (size_t k = 0; k < n; ++k)
      for (size_t i = 0; i <= k; ++i) w[k] += ipow(2, static_cast<long>(i)) * ipow(x[i], ipow(2, k - i).get_ui());
    // F shifts ghosts left; unghost the first n-1
    std::vector<mpz_class> y;
    for (size_t k = 0; k + 1 < n; ++k) {
      mpz_class s = w[k + 1];
      for (size_t i = 0; i < k; ++i) s -= ipow(2, static_cast<long>(i)) * ipow(y[i], ipow(2, k - i).get_ui());
      y.push_back(s / ipow(2, static_cast<long>(k)));
    }
    chain.push_back(y);
  }
  std::reverse(chain.begin(), chain.end());
  return chain;
}

Failures rigidity() {
  Failures f;
  Expect e{f};
  suite_checks(f, "arrow", "rigidity");
  auto rep = rigidity_shadow(2, 3, -8, 8, 200, 1);
  long tuples = 0, bad = 0;
  std::vector<long> v(4, -8);
  while (true) {
    auto chain = frobenius_chain_p2({v[0], v[1], v[2], v[3]});
    bool in_range = true;
    for (const auto& lv : chain)
      for (const auto& c : lv) in_range = in_range && c >= -8 && c <= 8;
    if (in_range) {
      ++tuples;
      for (int i = 0; i < 3; ++i)
        if (mod_nonneg(chain[i][0] - chain[i + 1][0], ipow(2, 3 - i)) != 0) ++bad;
    }
    int k = 0;
    while (k < 4 && ++v[k] == 9) v[k++] = -8;
    if (k == 4) break;
  }
  e(rep.top_levels == 83521, "top-level count " + std::to_string(rep.top_levels));
  e(tuples == rep.tuples, "oracle found " + std::to_string(tuples) + " tuples, library " + std::to_string(rep.tuples));
  e(tuples > 0 && bad == 0, "oracle congruence failures: " + std::to_string(bad));
  return f;
}

mpq_class field_val(const CyclotomicField& k, const QVec& x) {
  if (k.conductor_prime() == k.prime()) return oracle::norm_oracle_val(k, x);
  std::optional<long> best;
  for (const auto& c : x)
    if (c != 0) best = best ? std::min(*best, vp(c, k.prime())) : vp(c, k.prime());
  return *best;
}

Failures kernel_norm() {
  Failures f;
  Expect e{f};
  suite_checks(f, "kernel", "", 50);
  Rng g(31);
  for (long p : {2L, 3L})
    for (int j = 1; j <= 2; ++j) {
      mpq_class c = 0;
      for (int i = 1; i <= j; ++i) c += mpq_class(mpz_class(1), ipow(p, i));
      c.canonicalize();
      Rationals q(p);
      for (long a = -2; a <= 2; ++a)
        for (int s = 0; s < 10; ++s) {
          mpq_class t = canon(uniform(g, 1, 30) * p + 1, uniform(g, 1, 30) * p + 1) *
                        (a >= 0 ? mpq_class(ipow(p, a)) : mpq_class(mpz_class(1), ipow(p, -a)));
          auto k = kernel_element_from_w1(q, t, j);
          ExtNorm wn;
          for (int i = 0; i <= j; ++i)
            if (k.x[i] != 0) wn = max(wn, ExtNorm::from_val(mpq_class(vp(k.x[i], p)) / mpq_class(ipow(p, i))));
          e(ExtNorm::from_val(a) == wn.scaled(c), "Q kernel identity at t=" + t.get_str());
        }
      CyclotomicField k8(2, 3, p);
      for (int s = 0; s < 50; ++s) {
        QVec t(k8.degree());
        for (auto& x : t) x = canon(uniform(g, -5, 5), uniform(g, 1, 3));
        if (k8.is_zero(t)) t = k8.one();
        t = k8.mul(t, k8.from_rational(mpq_class(ipow(p, s % 5)) / mpq_class(ipow(p, 2))));
        auto kx = kernel_element_from_w1(k8, t, j);
        ExtNorm wn;
        for (int i = 0; i <= j; ++i)
          if (!k8.is_zero(kx.x[i]))
            wn = max(wn, ExtNorm::from_val(field_val(k8, kx.x[i]) / mpq_class(ipow(p, i))));
        e(ExtNorm::from_val(field_val(k8, t)) == wn.scaled(c), "Q(zeta_8) kernel identity at " + k8.format(t));
      }
    }
  return f;
}

bool pth_power_is(const Trunc& b, const std::vector<mpz_class>& target, long p, int k, int e) {
  const mpz_class mod = ipow(p, e);
  return oracle::zpoly_pow(b.c, p, p, k, mod) == oracle::zpoly_reduce(target, p, k, mod);
}

std::vector<mpz_class> times(const std::vector<mpz_class>& a, long c) {
  auto out = a;
  for (auto& x : out) x *= c;
  return out;
}

Failures perfect_verdicts() {
  Failures f;
  Expect e{f};
  suite_checks(f, "perfect", "verdicts");
  for (long p : {2L, 3L, 5L}) {
    auto v = witt_perfect_test(p, 0);
    e(v.verdict() == "no" && v.counterexample.has_value(), "Z at p=" + std::to_string(p));
    if (v.counterexample) {
      // no b mod p^2 with b^p = p a
      for (long b = 0; b < p * p; ++b)
        e(mod_nonneg(ipow(mpz_class(b), p) - p * v.counterexample->c[0], p * p) != 0,
          "counterexample has a root at p=" + std::to_string(p));
    }
    for (const auto& w : v.witnesses)
      e(pth_power_is(w.b, w.condition == 1 ? w.a.c : times(w.a.c, p), p, 0, w.condition), "Z witness");
  }
  IntegersModPM r8(2, 2, 3);
  e(pth_power_is(r8.add(r8.zeta(1), r8.zeta(7)), {2, 0, 0, 0}, 2, 3, 2), "zeta_8 + zeta_8^7 squares to 2 mod 4");
  auto v3 = witt_perfect_test(3, 1);
  e(v3.verdict() == "no" && v3.counterexample.has_value(), "Z[zeta_3]");
  if (v3.counterexample)
    for (long b0 = 0; b0 < 3; ++b0)
      for (long b1 = 0; b1 < 3; ++b1)
        e(!pth_power_is(IntegersModPM(3, 1, 1).from_coeffs({b0, b1}, 1), v3.counterexample->c, 3, 1, 1),
          "Z[zeta_3] counterexample is a cube");
  for (int k = 0; k <= 2; ++k) {
    auto v = witt_perfect_tower_test(2, 2, k);
    e(v.verdict() == "yes-up-to-level-" + std::to_string(k), "tower k=" + std::to_string(k) + ": " + v.verdict());
    for (const auto& w : v.witnesses) {
      int up = 0;
      while ((1ul << up) < w.b.c.size()) ++up;
      std::vector<mpz_class> big(2 * w.a.c.size());
      for (size_t i = 0; i < w.a.c.size(); ++i) big[2 * i] = w.a.c[i] * (w.condition == 2 ? 2 : 1);
      e(pth_power_is(w.b, big, 2, up + 1, w.condition), "tower witness");
    }
  }
  return f;
}

Failures frobenius_solving() {
  Failures f;
  Expect e{f};
  suite_checks(f, "perfect", "solve", 100);
  suite_checks(f, "perfect", "normed", 50);
  // norm contract from determinant valuations
  auto seq = build_root_sequence(2, 4);
  CyclotomicField qi(2, 2, 2);
  Rng g(5);
  auto oracle_norm = [](const CyclotomicField& k, const WittVec<CyclotomicField>& x) {
    ExtNorm s;
    for (int i = 0; i <= x.length_exponent(); ++i)
      if (!k.is_zero(x[i]))
        s = max(s, ExtNorm::from_val(oracle::norm_oracle_val(k, x[i]) / mpq_class(ipow(2, i))));
    return s;
  };
  for (int t = 0; t < 20; ++t) {
    auto x = random_vec(qi, g, t % 2);
    auto s = solve_frobenius_normed(x, seq);
    e(oracle_norm(s.y.ring(), s.y).pow(2) <= oracle_norm(qi, x), "norm contract at " + to_string(x));
  }
  return f;
}

Failures tilt_laws() {
  Failures f;
  Expect e{f};
  suite_checks(f, "tilt", "laws");
  struct Inst {
    long p;
    int M, D;
  };
  for (auto [p, M, D] : {Inst{2, 3, 3}, Inst{3, 2, 2}}) {
    IntegersModPM r(p, M);
    TiltRing t(r, D);
    const long q = ipow(p, M).get_si();
    // coherent tuples by brute force
    std::vector<TiltElt> all;
    std::vector<long> x(D + 1, 0);
    while (true) {
      bool ok = true;
      for (int m = 0; m < D && ok; ++m) ok = mod_nonneg(ipow(mpz_class(x[m + 1]), p) - x[m], q) == 0;
      if (ok) {
        std::vector<Trunc> s;
        for (long v : x) s.push_back(r.from_int(v));
        all.push_back(t.make(s));
      }
      int k = 0;
      while (k <= D && ++x[k] == q) x[k++] = 0;
      if (k > D) break;
    }
    e(static_cast<long>(all.size()) == q, "coherent sequences over Z/" + std::to_string(q));
    // the tilt is F_p: classes are x_D mod p
    auto cls = [&](const TiltElt& a) { return mod_nonneg(a.seq.back().c[0], p).get_si(); };
    for (const auto& a : all)
      for (const auto& b : all) {
        e(cls(t.add(a, b)) == (cls(a) + cls(b)) % p, "sum class");
        e(cls(t.mul(a, b)) == (cls(a) * cls(b)) % p, "product class");
      }
  }
  return f;
}

Failures charp_overconvergence() {
  Failures f;
  Expect e{f};
  suite_checks(f, "tilt", "charp", 100);
  suite_checks(f, "tilt", "dlz");
  PerfPolyRing r(2, 1, 4);
  Rng g(77);
  for (int it = 0; it < 100; ++it) {
    const int len = static_cast<int>(uniform(g, 0, 3));
    std::vector<PerfPoly> comps;
    std::vector<std::optional<mpq_class>> degs;
    for (int i = 0; i <= len; ++i) {
      PerfPoly p;
      std::optional<mpq_class> d;
      for (long s = uniform(g, 0, 3); s > 0; --s) {
        const long ex = uniform(g, 0, 12);
        p = r.add(p, r.monomial(1, {mpq_class(ex)}));
      }
      if (!p.empty()) d = r.degree(p);
      comps.push_back(p);
      degs.push_back(d);
    }
    WittVec<PerfPolyRing> v(r, comps);
    auto arrow = arrow_from_perfect(v, 4);
    for (mpq_class b : {mpq_class(1, 4), mpq_class(1, 2), mpq_class(1), mpq_class(2)}) {
      // sup_j 2^{-bj} 2^{deg f_j / 2^j}
      std::optional<mpq_class> best;
      for (int j = 0; j <= len; ++j)
        if (degs[j]) {
          mpq_class lg = *degs[j] / mpq_class(ipow(2, j)) - b * j;
          if (!best || lg > *best) best = lg;
        }
      const ExtNorm want = best ? ExtNorm::from_val(-*best) : ExtNorm::zero();
      auto an = arrow_norm(arrow, b);
      e(an.exact && an.value == want, "inverse-limit norm vs closed form");
      e(charp_overconv_norm(v, b) == want, "formula norm vs closed form");
    }
  }
  PerfPolyRing r0(2, 1, 0);
  for (long C0 = 0; C0 <= 2; ++C0)
    for (long D0 = 0; D0 <= 2; ++D0)
      for (long bump : {0L, 1L}) {
        std::vector<long> degs;
        std::vector<PerfPoly> comps;
        for (int j = 0; j <= 3; ++j) {
          degs.push_back(C0 * j * (1L << j) + D0 * (1L << j) + (j == 3 ? bump : 0));
          comps.push_back(r0.monomial(1, {mpq_class(degs.back())}));
        }
        WittVec<PerfPolyRing> v(r0, comps);
        for (long C = 0; C <= 2; ++C)
          for (long D = 0; D <= 2; ++D) {
            bool expect = true;
            for (int j = 0; j <= 3; ++j) expect = expect && degs[j] <= C * j * (1L << j) + D * (1L << j);
            auto rep = dlz_classify(v, C, D);
            e(rep.degree_condition == expect && rep.norm_condition == expect, "DLZ family");
          }
      }
  return f;
}

Failures untilt_isometry() {
  Failures f;
  Expect e{f};
  suite_checks(f, "tilt", "untilt");
  e(samples_of("tilt", "untilt/isometry") == 90, "30 certified inputs at three radii");
  return f;
}

Failures sandwich() {
  Failures f;
  Expect e{f};
  suite_checks(f, "arrow", "sandwich");
  for (long b : {1L, 2L, 4L}) {
    const std::string s = std::to_string(b);
    e(samples_of("arrow", "sandwich/lower/b=" + s) == 100 && samples_of("arrow", "sandwich/upper/b=" + s) == 100,
      "100 certified samples at b=" + s);
  }
  return f;
}

Failures artin_checks() {
  Failures f;
  Expect e{f};
  suite_checks(f, "artin", "");
  e(teichmuller_phi_invariance(CyclotomicField(2, 2, 5), CyclotomicField(2, 2, 5).zeta(1)), "phi-invariance at 5");
  e(!teichmuller_phi_invariance(CyclotomicField(2, 2, 3), CyclotomicField(2, 2, 3).zeta(1)), "phi-invariance at 3");
  const int K = 30;
  auto iotas = oracle::sqrt_minus_one(5, K);
  CyclotomicField qi5(2, 2, 5), qi3(2, 2, 3);
  e(invariant_classify(qi5, qi5.zeta(1), 4).report.bounded, "i bounded at 5");
  e(!invariant_classify(qi3, qi3.zeta(1), 4).report.bounded, "i unbounded at 3");
  for (long an = -3; an <= 3; ++an)
    for (long bn = -3; bn <= 3; ++bn)
      for (long ad : {1L, 2L, 3L, 5L})
        for (long bd : {1L, 2L, 3L, 5L}) {
          if (an == 0 && bn == 0) continue;
          const mpq_class a = canon(an, ad), b = canon(bn, bd);
          bool integral5 = true;
          for (const auto& iota : iotas) integral5 = integral5 && oracle::place_val(a, b, iota, 5, K) >= 0;
          e(invariant_classify(qi5, QVec{a, b}, 4).report.bounded == integral5, "p=5 grid " + qi5.format({a, b}));
          e(invariant_classify(qi3, QVec{a, b}, 4).report.bounded == (b == 0 && vp(a, 3) >= 0),
            "p=3 grid " + qi3.format({a, b}));
        }
  return f;
}

struct Criterion {
  int id;
  const char* name;
  double limit;
  Failures (*body)();
};

}  // namespace

int main() {
  const std::vector<Criterion> all{
      {1, "universal polynomials", 10, universal_polynomials},
      {2, "Witt ring axioms", 30, witt_axioms},
      {3, "norm laws", 30, norm_laws},
      {4, "multiplication by p", 5, mult_by_p},
      {5, "lifting", 60, lifting},
      {6, "theta map", 60, theta_map},
      {7, "rigidity shadow over Z", 120, rigidity},
      {8, "kernel norm", 10, kernel_norm},
      {9, "Witt-perfect verdicts", 30, perfect_verdicts},
      {10, "Frobenius solving", 60, frobenius_solving},
      {11, "tilt ring laws", 120, tilt_laws},
      {12, "char p overconvergence", 30, charp_overconvergence},
      {13, "untilt isometry", 60, untilt_isometry},
      {14, "inverse Frobenius sandwich", 30, sandwich},
      {15, "Frobenius-invariant ghost constants", 30, artin_checks},
  };
  int failed = 0;
  for (const auto& c : all) {
    const auto t0 = std::chrono::steady_clock::now();
    Failures f;
    try {
      f = c.body();
    } catch (const std::exception& ex) {
      f.push_back(std::string("exception: ") + ex.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.limit) f.push_back("over the time limit");
    const bool ok = f.empty();
    if (!ok) ++failed;
    std::printf("%s  %2d  %-38s %8.3f s  (limit %g s)\n", ok ? "PASS" : "FAIL", c.id, c.name, secs, c.limit);
    for (size_t i = 0; i < f.size() && i < 10; ++i) std::printf("        %s\n", f[i].c_str());
    if (f.size() > 10) std::printf("        ... %zu more\n", f.size() - 10);
  }
  return failed == 0 ? 0 : 1;
}
