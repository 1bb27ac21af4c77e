#include "witt/perfect.hpp"

#include <functional>
#include <map>

#include "witt/error.hpp"
#include "witt/gmp_util.hpp"

namespace witt {

namespace {

constexpr long kMaxEnumerable = 1L << 20;

std::string key(const Trunc& t) {
  std::string s;
  for (const auto& c : t.c) s += c.get_str() + ",";
  return s;
}

Trunc embed_trunc(const IntegersModPM& lower, const IntegersModPM& upper, const Trunc& a) {
  QVec big = upper.lift_ring().embed(lower.lift_ring(), lower.lift(a));
  return upper.reduce(big, std::min(a.prec, upper.digits()));
}

// zeta_{p^j} -> zeta_{p^{j+1}} on coefficient vectors; a p-th root mod p
Trunc sigma_substitute(const IntegersModPM& upper, const Trunc& a) {
  ZVec c(upper.degree());
  for (size_t i = 0; i < a.c.size(); ++i) c[i] = a.c[i];
  return upper.from_coeffs(c, a.prec);
}

QVec sigma_substitute(const CyclotomicField& upper, const QVec& a) {
  QVec c(upper.degree());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  return c;
}

Trunc with_prec(const IntegersModPM& r, const Trunc& a, int prec) { return r.with_precision(a, prec); }

}  // namespace

std::string PerfectVerdict::verdict() const {
  switch (kind) {
    case Kind::Yes:
      return "yes";
    case Kind::No:
      return "no";
    case Kind::YesUpToLevel:
      return "yes-up-to-level-" + std::to_string(level);
  }
  return "no";
}

std::vector<Trunc> residues_mod_p(const IntegersModPM& r) {
  const long p = r.prime();
  const int d = r.degree();
  long total = 1;
  for (int i = 0; i < d; ++i) {
    total *= p;
    if (total > kMaxEnumerable) fail(ErrorKind::NotEnumerable, r.name() + " mod p is too large to enumerate");
  }
  std::vector<Trunc> out;
  out.reserve(total);
  std::vector<long> dig(d, 0);
  for (long n = 0; n < total; ++n) {
    ZVec c(dig.begin(), dig.end());
    out.push_back(r.from_coeffs(c, r.digits()));
    for (int i = d - 1; i >= 0; --i) {
      if (++dig[i] < p) break;
      dig[i] = 0;
    }
  }
  return out;
}

PerfectVerdict witt_perfect_test(long p, int k) {
  IntegersModPM r1(p, 1, k), r2(p, 2, k);
  PerfectVerdict v;
  v.ring = IntegersModPM(p, 2, k).name();
  auto res1 = residues_mod_p(r1);
  std::map<std::string, Trunc> pth_mod_p;
  for (const auto& b : res1) pth_mod_p.emplace(key(power(r1, b, static_cast<unsigned long>(p))), b);
  std::optional<Trunc> bad1;
  for (const auto& a : res1) {
    auto it = pth_mod_p.find(key(a));
    if (it == pth_mod_p.end()) {
      if (!bad1) bad1 = a;
      continue;
    }
    v.witnesses.push_back({a, it->second, 1});
  }
  auto res2 = residues_mod_p(r2);
  std::map<std::string, Trunc> pth_mod_p2;
  for (const auto& b : res2) pth_mod_p2.emplace(key(power(r2, b, static_cast<unsigned long>(p))), b);
  std::optional<Trunc> bad2;
  const Trunc pp = r2.from_int(p);
  for (const auto& a : res2) {
    auto it = pth_mod_p2.find(key(r2.mul(pp, a)));
    if (it == pth_mod_p2.end()) {
      if (!bad2) bad2 = a;
      continue;
    }
    v.witnesses.push_back({a, it->second, 2});
  }
  if (!bad1 && !bad2) {
    v.kind = PerfectVerdict::Kind::Yes;
  } else {
    v.kind = PerfectVerdict::Kind::No;
    v.failed_condition = bad1 ? 1 : 2;
    v.counterexample = bad1 ? *bad1 : *bad2;
  }
  return v;
}

std::optional<Trunc> root_of_pa(long p, int k, const Trunc& a) {
  IntegersModPM r2(p, 2, k);
  Trunc target = r2.mul(r2.from_int(p), r2.with_precision(a, 2));
  for (const auto& b : residues_mod_p(r2))
    if (r2.equal(power(r2, b, static_cast<unsigned long>(p)), target)) return b;
  return std::nullopt;
}


namespace {

// x_1 with v(x_1) = 1/p. Adding c with v(c) >= 2/p does not change x_1^p mod p^2, so only
// the pi-adic digits between d/p and 2d/p are searched, level by level.
std::pair<int, QVec> first_root(long p) {
  if (p == 2) {
    CyclotomicField f(2, 3, 2);
    return {3, f.add(f.zeta(1), f.zeta(7))};
  }
  for (int level = 2; level <= 4; ++level) {
    CyclotomicField f(p, level, p);
    IntegersModPM r2(p, 2, level);
    const long lo = f.degree() / p, hi = 2 * f.degree() / p;
    long total = 1;
    for (long j = lo; j < hi && total <= kMaxEnumerable; ++j) total *= p;
    if (total > kMaxEnumerable) break;
    const QVec pi = f.sub(f.one(), f.zeta(1));
    std::vector<Trunc> pw;
    for (long j = lo; j < hi; ++j) pw.push_back(r2.reduce(power(f, pi, static_cast<unsigned long>(j)), 2));
    const Trunc target = r2.from_int(p);
    std::vector<long> dig(pw.size(), 0);
    for (long t = 0; t < total; ++t) {
      if (dig[0] != 0) {
        Trunc b = r2.zero();
        for (size_t j = 0; j < pw.size(); ++j)
          if (dig[j]) b = r2.add(b, r2.mul(r2.from_int(dig[j]), pw[j]));
        if (r2.equal(power(r2, b, static_cast<unsigned long>(p)), target)) return {level, r2.lift(b)};
      }
      for (size_t j = pw.size(); j-- > 0;) {
        if (++dig[j] < p) break;
        dig[j] = 0;
      }
    }
  }
  fail(ErrorKind::CapabilityMissing, "no x_1 with x_1^p = p mod p^2 found at enumerable tower levels");
}

}  // namespace

int root_sequence_base_level(long p) { return first_root(p).first; }

RootSequence::RootSequence(long p, std::vector<CyclotomicField> fields, std::vector<QVec> elems)
    : p_(p), fields_(std::move(fields)), elems_(std::move(elems)) {
  if (fields_.size() != elems_.size()) fail(ErrorKind::MalformedConfig, "one field per element");
  const mpq_class pq(p_);
  for (size_t i = 0; i < elems_.size(); ++i) {
    const auto& f = fields_[i];
    if (f.conductor_prime() != p_ || f.prime() != p_) fail(ErrorKind::RingMismatch, "root sequence needs a p-tower");
    QVec xp = power(f, elems_[i], static_cast<unsigned long>(p_));
    QVec diff;
    mpq_class scale;
    if (i == 0) {
      diff = f.sub(xp, f.from_int(p_));
      scale = 1 / (pq * pq);
    } else {
      diff = f.sub(xp, f.embed(fields_[i - 1], elems_[i - 1]));
      scale = 1 / pq;
    }
    if (!f.is_p_integral(elems_[i]) || !f.is_p_integral(f.scale(diff, scale)))
      fail(ErrorKind::Incoherent, "root sequence congruence fails at x_" + std::to_string(i + 1));
  }
}

const QVec& RootSequence::x(int n) const {
  if (n < 1 || n > size()) fail(ErrorKind::DepthExceeded, "x_" + std::to_string(n) + " not in sequence");
  return elems_[n - 1];
}

const CyclotomicField& RootSequence::field(int n) const {
  if (n < 1 || n > size()) fail(ErrorKind::DepthExceeded, "x_" + std::to_string(n) + " not in sequence");
  return fields_[n - 1];
}

RootSequence build_root_sequence(long p, int n) {
  require_prime(p);
  std::vector<CyclotomicField> fields;
  std::vector<QVec> elems;
  if (n > 0) {
    auto [base, x1] = first_root(p);
    fields.emplace_back(p, base, p);
    elems.push_back(x1);
    for (int i = 1; i < n; ++i) {
      fields.emplace_back(p, base + i, p);
      elems.push_back(sigma_substitute(fields.back(), elems.back()));
    }
  }
  return RootSequence(p, std::move(fields), std::move(elems));
}

PerfectVerdict witt_perfect_tower_test(long p, int base, int k) {
  PerfectVerdict v;
  v.ring = "Z[zeta_{" + std::to_string(p) + "^inf}] from level " + std::to_string(base);
  const auto [x1_level, x1] = first_root(p);
  const CyclotomicField x1_field(p, x1_level, p);
  if (base + 1 < x1_level) fail(ErrorKind::CapabilityMissing, "tower base too low for x_1");
  for (int j = 0; j <= k; ++j) {
    IntegersModPM lo1(p, 1, base + j), up1(p, 1, base + j + 1), lo2(p, 2, base + j), up2(p, 2, base + j + 1);
    Trunc x1_up = up2.reduce(up2.lift_ring().embed(x1_field, x1), 2);
    const Trunc pp = up2.from_int(p);
    for (const auto& a : residues_mod_p(lo1)) {
      Trunc b = sigma_substitute(up1, a);
      bool ok1 = up1.equal(power(up1, b, static_cast<unsigned long>(p)), embed_trunc(lo1, up1, a));
      Trunc a2 = with_prec(lo2, a, 2);
      Trunc b2 = up2.mul(x1_up, sigma_substitute(up2, a2));
      bool ok2 = up2.equal(power(up2, b2, static_cast<unsigned long>(p)), up2.mul(pp, embed_trunc(lo2, up2, a2)));
      if (!ok1 || !ok2) {
        v.kind = PerfectVerdict::Kind::No;
        v.level = j;
        v.failed_condition = ok1 ? 2 : 1;
        v.counterexample = a;
        return v;
      }
      v.witnesses.push_back({a, b, 1});
      v.witnesses.push_back({a2, b2, 2});
    }
  }
  v.kind = PerfectVerdict::Kind::YesUpToLevel;
  v.level = k;
  return v;
}

std::vector<PowerIdealSample> power_ideal_check(const RootSequence& seq, int n, long m,
                                                const std::vector<QVec>& samples) {
  const long p = seq.prime();
  const mpz_class pn = ipow(p, n);
  if (m < 1 || m > pn) fail(ErrorKind::MalformedConfig, "need 1 <= m <= p^n");
  const CyclotomicField& f = seq.field(n);
  const QVec xnm = power(f, seq.x(n), static_cast<unsigned long>(m));
  const QVec xnm_inv = f.inverse(xnm);
  const mpq_class pm_inv = mpq_class(1) / mpq_class(ipow(p, m));
  std::vector<PowerIdealSample> out;
  for (const auto& x : samples) {
    if (!f.is_p_integral(x)) fail(ErrorKind::IntegralityViolation, "sample is not p-integral");
    PowerIdealSample s;
    s.x = x;
    s.power_in_ideal = f.is_p_integral(f.scale(power(f, x, pn), pm_inv));
    QVec u = f.mul(x, xnm_inv);
    if (f.is_p_integral(u)) {
      s.in_ideal = true;
      s.u = u;
      s.w = f.zero();
    } else {
      QVec w = f.scale(x, mpq_class(1, p));
      if (f.is_p_integral(w)) {
        s.in_ideal = true;
        s.u = f.zero();
        s.w = w;
      }
    }
    if (s.in_ideal && !f.equal(f.add(f.mul(*s.u, xnm), f.scale(*s.w, mpq_class(p))), x))
      fail(ErrorKind::Incoherent, "cofactors do not reproduce the sample");
    s.consistent = s.in_ideal == s.power_in_ideal;
    out.push_back(std::move(s));
  }
  return out;
}

WittVec<IntegersModPM> solve_frobenius(const WittVec<IntegersModPM>& x) {
  const IntegersModPM& r = x.ring();
  const long p = r.prime();
  const int n = x.length_exponent();
  const int M = r.digits();
  if (n + 1 >= M) fail(ErrorKind::PrecisionExhausted, "solving F(y) = x loses n+1 digits; need M > n+1");
  auto root = r.pth_root_mod_p(x[0]);
  if (!root) fail(ErrorKind::NoRoot, "no p-th root of " + r.format(x[0]) + " mod p");

  // other roots of x_1 mod p differ by elements of the Frobenius kernel mod p, spanned by pi^j, pj >= d
  IntegersModPM r1(p, 1, r.level());
  std::vector<Trunc> kernel;
  if (r.level() > 0) {
    Trunc pi = r1.sub(r1.one(), r1.zeta(1));
    Trunc pw = r1.one();
    for (int j = 0; j < r.degree(); ++j, pw = r1.mul(pw, pi))
      if (static_cast<long>(j) * p >= r.degree()) kernel.push_back(pw);
  }
  long combos = 1;
  for (size_t i = 0; i < kernel.size() && combos <= 4096; ++i) combos *= p;
  combos = std::min(combos, 4096L);

  std::vector<long> digits(kernel.size(), 0);
  for (long trial = 0; trial < combos; ++trial) {
    Trunc y0 = with_prec(r1, *root, 1);
    for (size_t i = 0; i < kernel.size(); ++i)
      if (digits[i]) y0 = r1.add(y0, r1.mul(r1.from_int(digits[i]), kernel[i]));
    for (size_t i = 0; i < digits.size(); ++i) {
      if (++digits[i] < p) break;
      digits[i] = 0;
    }
    std::vector<Trunc> y{r.with_precision(y0, M)};
    bool ok = true;
    for (int i = 0; i <= n && ok; ++i) {
      std::vector<Trunc> head(y);
      head.push_back(r.zero());
      Trunc fi = frobenius(WittVec<IntegersModPM>(r, head))[i];
      try {
        y.push_back(r.divide_by_p(r.sub(x[i], fi)));
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotDivisible) throw;
        ok = false;
      }
    }
    if (!ok) continue;
    WittVec<IntegersModPM> out(r, y);
    if (!(frobenius(out) == x)) fail(ErrorKind::Incoherent, "Frobenius preimage check failed");
    return out;
  }
  fail(ErrorKind::NoRoot, "no choice of the first component gives an integral preimage");
}

namespace {

// Search over pi-adic digits of t = y_1 for y = unghost(t, ghost(x)) with v(y_i) >= rho_i.
class DigitSearch {
 public:
  DigitSearch(const CyclotomicField& f, std::vector<QVec> ghosts, std::vector<mpq_class> rho, long budget)
      : f_(f), p_(f.prime()), g_(std::move(ghosts)), rho_(std::move(rho)), budget_(budget) {
    pi_.push_back(f_.one());
    pi1_ = f_.sub(f_.one(), f_.zeta(1));
  }

  std::optional<QVec> run() {
    long j0 = mpz_class(ceil_q(rho_[0] * f_.degree())).get_si();
    if (j0 < 0) j0 = 0;
    QVec t = f_.zero();
    if (visit(t, j0)) return found_;
    return std::nullopt;
  }
  long nodes() const { return nodes_; }

 private:
  static mpz_class ceil_q(const mpq_class& q) {
    mpz_class c;
    mpz_cdiv_q(c.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return c;
  }

  const QVec& pipow(long j) {
    while (static_cast<long>(pi_.size()) <= j) pi_.push_back(f_.mul(pi_.back(), pi1_));
    return pi_[j];
  }

  // min_k v_p(C(N,k)) + (N-k) v + k e over k = 1..N, for N = p^a
  mpq_class binom_bound(int a, const std::optional<mpq_class>& v, const mpq_class& e) const {
    const long N = ipow(p_, a).get_si();
    if (!v) return e * N;
    mpq_class best = e * N;
    for (long k = 1; k < N; ++k) {
      mpq_class c = mpq_class(a - vp(mpz_class(k), p_)) + (*v) * (N - k) + e * k;
      if (c < best) best = c;
    }
    return best;
  }

  bool visit(const QVec& t, long j) {
    if (++nodes_ > budget_) return false;
    const int len = static_cast<int>(rho_.size());
    const mpq_class eps(j, f_.degree());
    std::vector<QVec> y{t};
    std::vector<std::optional<mpq_class>> v;
    std::vector<mpq_class> e{eps};
    auto val = [&](const QVec& a) -> std::optional<mpq_class> {
      if (f_.is_zero(a)) return std::nullopt;
      return f_.norm(a).val();
    };
    v.push_back(val(t));
    for (int i = 1; i < len; ++i) {
      QVec acc = g_[i - 1];
      mpq_class err;
      bool first = true;
      for (int k = 0; k < i; ++k) {
        QVec term = f_.scale(power(f_, y[k], ipow(p_, i - k)), mpq_class(ipow(p_, k)));
        acc = f_.sub(acc, term);
        mpq_class b = k + binom_bound(i - k, v[k], e[k]);
        if (first || b < err) err = b;
        first = false;
      }
      y.push_back(f_.scale(acc, mpq_class(1) / mpq_class(ipow(p_, i))));
      v.push_back(val(y.back()));
      e.push_back(err - i);
    }
    bool solved = true;
    for (int i = 0; i < len; ++i) {
      if (!v[i]) continue;
      if (*v[i] < rho_[i]) {
        solved = false;
        if (*v[i] < std::min(rho_[i], e[i])) return false;
      }
    }
    if (solved) {
      found_ = t;
      return true;
    }
    for (long a = 0; a < p_; ++a) {
      QVec next = a == 0 ? t : f_.add(t, f_.scale(pipow(j), mpq_class(a)));
      if (visit(next, j + 1)) return true;
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  const CyclotomicField& f_;
  long p_;
  std::vector<QVec> g_;
  std::vector<mpq_class> rho_;
  long budget_;
  long nodes_ = 0;
  std::vector<QVec> pi_;
  QVec pi1_;
  QVec found_;
};

}  // namespace

NormedSolution solve_frobenius_normed(const WittVec<CyclotomicField>& x, const RootSequence& seq,
                                      int max_extra_levels) {
  const CyclotomicField& fk = x.ring();
  const long p = fk.prime();
  if (fk.conductor_prime() != p || seq.prime() != p)
    fail(ErrorKind::UnsupportedInstance, "normed Frobenius solving needs the p-cyclotomic tower");
  const int s = x.length_exponent();
  NormedSolution out{WittVec<CyclotomicField>(fk, std::vector<QVec>(s + 2, fk.zero()))};
  if (is_zero(x)) return out;

  const mpq_class gamma = witt_norm(x).val();
  // make |x|_W > 1 using F([p^k] y) = [p^{pk}] F(y)
  long k = 0;
  if (gamma >= 0) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), gamma.get_num_mpz_t(), gamma.get_den_mpz_t());
    k = fl.get_si() / p + 1;
  }
  const mpq_class gamma2 = gamma - mpq_class(p * k);
  const mpq_class window = mpq_class(1) / mpq_class(ipow(p, s + 1));
  int n = 0;
  long m = 0;
  mpq_class delta;
  for (int cand = 1; cand <= seq.size(); ++cand) {
    mpq_class scaled = -gamma2 * mpq_class(ipow(p, cand - 1));
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), scaled.get_num_mpz_t(), scaled.get_den_mpz_t());
    long mm = fl.get_si() + 1;
    mpq_class dd = mpq_class(mm) / mpq_class(ipow(p, cand - 1)) + gamma2;
    if (dd > 0 && dd < window) {
      n = cand;
      m = mm;
      delta = dd;
      break;
    }
  }
  if (n == 0) fail(ErrorKind::RescaleInfeasible, "no (m, n) window with the available root sequence");

  const int start = std::max(fk.level(), seq.field(n).level());
  for (int level = start; level <= start + max_extra_levels; ++level) {
    CyclotomicField fl(p, level, p);
    std::vector<QVec> xc;
    for (const auto& c : x.components()) xc.push_back(fl.embed(fk, c));
    WittVec<CyclotomicField> xl(fl, xc);
    const QVec pinv_pk = fl.from_rational(mpq_class(1) / mpq_class(ipow(p, p * k)));
    const QVec xn = fl.embed(seq.field(n), seq.x(n));
    WittVec<CyclotomicField> x1 = teichmuller_scale(power(fl, xn, static_cast<unsigned long>(p * m)),
                                                    teichmuller_scale(pinv_pk, xl));
    if (witt_norm(x1) != ExtNorm::from_val(delta)) fail(ErrorKind::Incoherent, "rescaled norm mismatch");
    std::vector<mpq_class> rho;
    for (int i = 0; i <= s + 1; ++i) rho.push_back(delta * mpq_class(ipow(p, i)) / mpq_class(p));
    auto g = ghost(x1);
    DigitSearch search(fl, g.components(), rho, 200000);
    auto t = search.run();
    out.nodes += search.nodes();
    if (!t) continue;
    std::vector<QVec> gy{*t};
    for (const auto& c : g.components()) gy.push_back(c);
    WittVec<CyclotomicField> y1 = unghost(GhostVec<CyclotomicField>(fl, gy));
    WittVec<CyclotomicField> y = teichmuller_scale(fl.from_rational(mpq_class(ipow(p, k))),
                                                   teichmuller_scale(fl.inverse(power(fl, xn, static_cast<unsigned long>(m))), y1));
    if (!(frobenius(y) == xl)) fail(ErrorKind::Incoherent, "normed preimage fails F(y) = x");
    if (!(witt_norm(y).pow(p) <= witt_norm(xl))) fail(ErrorKind::Incoherent, "normed preimage violates the norm bound");
    out.y = y;
    out.k = k;
    out.m = m;
    out.n = n;
    return out;
  }
  fail(ErrorKind::NoRoot, "no norm-controlled preimage found up to level " + std::to_string(start + max_extra_levels));
}

}  // namespace witt
