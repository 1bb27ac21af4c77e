#pragma once

#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "witt/error.hpp"
#include "witt/gmp_util.hpp"
#include "witt/ring.hpp"
#include "witt/rings/integers.hpp"
#include "witt/universal.hpp"

namespace witt {

// Finite-length p-typical Witt vector (x_1, x_p, ..., x_{p^n}).
template <NormedRing R>
class WittVec {
 public:
  using Elem = typename R::Elem;

  WittVec(R ring, std::vector<Elem> comps) : ring_(std::move(ring)), c_(std::move(comps)) {
    if (c_.empty()) fail(ErrorKind::LengthZero, "Witt vector needs at least one component");
  }

  const R& ring() const { return ring_; }
  long prime() const { return ring_.prime(); }
  // n, for length p^n
  int length_exponent() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Elem>& components() const { return c_; }
  const Elem& operator[](size_t i) const { return c_.at(i); }

 private:
  R ring_;
  std::vector<Elem> c_;
};

// Ghost components (w_1, w_p, ..., w_{p^n}).
template <NormedRing R>
class GhostVec {
 public:
  using Elem = typename R::Elem;

  GhostVec(R ring, std::vector<Elem> comps) : ring_(std::move(ring)), c_(std::move(comps)) {
    if (c_.empty()) fail(ErrorKind::LengthZero, "ghost vector needs at least one component");
  }
  const R& ring() const { return ring_; }
  int length_exponent() const { return static_cast<int>(c_.size()) - 1; }
  const std::vector<Elem>& components() const { return c_; }
  const Elem& operator[](size_t i) const { return c_.at(i); }

 private:
  R ring_;
  std::vector<Elem> c_;
};

template <NormedRing R>
bool operator==(const WittVec<R>& a, const WittVec<R>& b) {
  if (!(a.ring() == b.ring()) || a.length_exponent() != b.length_exponent()) return false;
  for (size_t i = 0; i < a.components().size(); ++i)
    if (!a.ring().equal(a[i], b[i])) return false;
  return true;
}

template <NormedRing R>
bool operator==(const GhostVec<R>& a, const GhostVec<R>& b) {
  if (!(a.ring() == b.ring()) || a.length_exponent() != b.length_exponent()) return false;
  for (size_t i = 0; i < a.components().size(); ++i)
    if (!a.ring().equal(a[i], b[i])) return false;
  return true;
}

template <NormedRing R>
std::string to_string(const WittVec<R>& x) {
  std::ostringstream os;
  os << "W(p=" << x.prime() << "; ";
  for (size_t i = 0; i < x.components().size(); ++i) os << (i ? ", " : "") << x.ring().format(x[i]);
  os << ")";
  return os.str();
}

template <NormedRing R>
std::string to_string(const GhostVec<R>& g) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < g.components().size(); ++i) os << (i ? ", " : "") << g.ring().format(g[i]);
  os << ")";
  return os.str();
}

namespace detail {

inline unsigned long upow(long p, int e) {
  unsigned long r = 1;
  for (int i = 0; i < e; ++i) r *= static_cast<unsigned long>(p);
  return r;
}

template <NormedRing R>
void require_same(const WittVec<R>& x, const WittVec<R>& y) {
  if (!(x.ring() == y.ring())) fail(ErrorKind::RingMismatch, x.ring().name() + " vs " + y.ring().name());
  if (x.length_exponent() != y.length_exponent())
    fail(ErrorKind::LengthMismatch, "lengths p^" + std::to_string(x.length_exponent()) + " and p^" +
                                        std::to_string(y.length_exponent()));
}

template <NormedRing R>
typename R::Elem divide_by_p(const R& r, const typename R::Elem& a) {
  if constexpr (DividesByP<R>) {
    return r.divide_by_p(a);
  } else {
    fail(ErrorKind::CapabilityMissing, "ring " + r.name() + " cannot divide by p");
  }
}

template <NormedRing R>
bool can_transport(const R& r) {
  Capabilities c = r.caps();
  return DividesByP<R> && (c.p_torsion_free || c.q_algebra);
}

}  // namespace detail

template <NormedRing R>
GhostVec<R> ghost(const WittVec<R>& x) {
  const R& r = x.ring();
  const long p = r.prime();
  const int n = x.length_exponent();
  std::vector<typename R::Elem> w;
  for (int m = 0; m <= n; ++m) {
    auto acc = r.zero();
    for (int i = 0; i <= m; ++i)
      acc = r.add(acc, scale(r, power(r, x[i], detail::upow(p, m - i)), ipow(p, i)));
    w.push_back(acc);
  }
  return GhostVec<R>(r, std::move(w));
}

template <NormedRing R>
WittVec<R> unghost(const GhostVec<R>& g) {
  const R& r = g.ring();
  const long p = r.prime();
  std::vector<typename R::Elem> xs;
  for (int m = 0; m <= g.length_exponent(); ++m) {
    auto rest = g[m];
    for (int i = 0; i < m; ++i)
      rest = r.sub(rest, scale(r, power(r, xs[i], detail::upow(p, m - i)), ipow(p, i)));
    for (int k = 0; k < m; ++k) {
      try {
        rest = detail::divide_by_p(r, rest);
      } catch (const Error& e) {
        if (e.kind() == ErrorKind::NotDivisible)
          fail(ErrorKind::NotIntegral, "ghost vector " + to_string(g) + " is not in the image at index " +
                                           std::to_string(m));
        throw;
      }
    }
    xs.push_back(rest);
  }
  return WittVec<R>(r, std::move(xs));
}

template <NormedRing R>
WittVec<R> teichmuller(const R& r, const typename R::Elem& a, int n) {
  std::vector<typename R::Elem> c(n + 1, r.zero());
  c[0] = a;
  return WittVec<R>(r, std::move(c));
}

// [a] * x = (a x_1, a^p x_p, a^{p^2} x_{p^2}, ...)
template <NormedRing R>
WittVec<R> teichmuller_scale(const typename R::Elem& a, const WittVec<R>& x) {
  const R& r = x.ring();
  std::vector<typename R::Elem> out;
  typename R::Elem ap = a;
  for (int i = 0; i <= x.length_exponent(); ++i) {
    out.push_back(r.mul(ap, x[i]));
    ap = power(r, ap, static_cast<unsigned long>(r.prime()));
  }
  return WittVec<R>(r, std::move(out));
}

template <NormedRing R>
WittVec<R> witt_zero(const R& r, int n) {
  return WittVec<R>(r, std::vector<typename R::Elem>(n + 1, r.zero()));
}

// The image of the integer m in W_{p^n}(R).
template <NormedRing R>
WittVec<R> witt_from_int(const R& r, const mpz_class& m, int n) {
  Integers z(r.prime());
  auto w = unghost(GhostVec<Integers>(z, std::vector<mpz_class>(n + 1, m)));
  std::vector<typename R::Elem> c;
  for (const auto& x : w.components()) c.push_back(r.from_int(x));
  return WittVec<R>(r, std::move(c));
}

template <NormedRing R>
WittVec<R> restrict(const WittVec<R>& x, int m) {
  if (m < 0 || m > x.length_exponent()) fail(ErrorKind::DepthExceeded, "restriction beyond length");
  std::vector<typename R::Elem> c(x.components().begin(), x.components().begin() + m + 1);
  return WittVec<R>(x.ring(), std::move(c));
}

template <NormedRing R>
WittVec<R> verschiebung(const WittVec<R>& x) {
  std::vector<typename R::Elem> c;
  c.push_back(x.ring().zero());
  for (const auto& e : x.components()) c.push_back(e);
  return WittVec<R>(x.ring(), std::move(c));
}

namespace detail {

enum class Op { Add, Mul };

template <NormedRing R>
WittVec<R> via_polys(const WittVec<R>& x, const WittVec<R>& y, Op op) {
  const R& r = x.ring();
  const int n = x.length_exponent();
  std::vector<typename R::Elem> out;
  for (int m = 0; m <= n; ++m) {
    const UnivPoly& f = op == Op::Add ? sum_poly(r.prime(), m) : prod_poly(r.prime(), m);
    std::vector<typename R::Elem> vars;
    for (int j = 0; j <= m; ++j) vars.push_back(x[j]);
    for (int j = 0; j <= m; ++j) vars.push_back(y[j]);
    out.push_back(evaluate(f, r, vars));
  }
  return WittVec<R>(r, std::move(out));
}

template <NormedRing R>
WittVec<R> via_ghosts(const WittVec<R>& x, const WittVec<R>& y, Op op) {
  const R& r = x.ring();
  auto gx = ghost(x);
  auto gy = ghost(y);
  std::vector<typename R::Elem> g;
  for (size_t i = 0; i < gx.components().size(); ++i)
    g.push_back(op == Op::Add ? r.add(gx[i], gy[i]) : r.mul(gx[i], gy[i]));
  try {
    return unghost(GhostVec<R>(r, std::move(g)));
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NotIntegral) fail(ErrorKind::IntegralityViolation, e.what());
    throw;
  }
}

template <NormedRing R>
WittVec<R> binary(const WittVec<R>& x, const WittVec<R>& y, Op op);

// Lift to the integral cover, compute there, reduce at the lowest input precision.
template <NormedRing R>
WittVec<R> via_lift(const WittVec<R>& x, const WittVec<R>& y, Op op) {
  const R& r = x.ring();
  auto L = r.lift_ring();
  using LE = decltype(r.lift(x[0]));
  std::vector<LE> lx, ly;
  int prec = r.caps().precision.value_or(0);
  for (size_t i = 0; i < x.components().size(); ++i) {
    lx.push_back(r.lift(x[i]));
    ly.push_back(r.lift(y[i]));
    prec = std::min({prec, r.precision_of(x[i]), r.precision_of(y[i])});
  }
  auto z = binary(WittVec<decltype(L)>(L, lx), WittVec<decltype(L)>(L, ly), op);
  std::vector<typename R::Elem> out;
  for (const auto& c : z.components()) out.push_back(r.reduce(c, prec));
  return WittVec<R>(r, std::move(out));
}

template <NormedRing R>
WittVec<R> binary(const WittVec<R>& x, const WittVec<R>& y, Op op) {
  require_same(x, y);
  const R& r = x.ring();
  if (x.length_exponent() <= universal_cap(r.prime())) return via_polys(x, y, op);
  if constexpr (HasIntegralLift<R>) {
    return via_lift(x, y, op);
  } else {
    if (can_transport(r)) return via_ghosts(x, y, op);
    fail(ErrorKind::Unsupported, "Witt arithmetic beyond index " + std::to_string(universal_cap(r.prime())) +
                                     " over " + r.name());
  }
}

}  // namespace detail

template <NormedRing R>
WittVec<R> add(const WittVec<R>& x, const WittVec<R>& y) {
  return detail::binary(x, y, detail::Op::Add);
}

template <NormedRing R>
WittVec<R> mul(const WittVec<R>& x, const WittVec<R>& y) {
  return detail::binary(x, y, detail::Op::Mul);
}

template <NormedRing R>
WittVec<R> neg(const WittVec<R>& x) {
  return mul(witt_from_int(x.ring(), -1, x.length_exponent()), x);
}

template <NormedRing R>
WittVec<R> sub(const WittVec<R>& x, const WittVec<R>& y) {
  return add(x, neg(y));
}

template <NormedRing R>
WittVec<R> scale_int(const WittVec<R>& x, const mpz_class& m) {
  return mul(witt_from_int(x.ring(), m, x.length_exponent()), x);
}

// F : W_{p^{n+1}} -> W_{p^n}
template <NormedRing R>
WittVec<R> frobenius(const WittVec<R>& x) {
  const R& r = x.ring();
  const int n = x.length_exponent() - 1;
  if (n < 0) fail(ErrorKind::LengthZero, "Frobenius needs length at least p");
  const long p = r.prime();
  std::vector<typename R::Elem> out;
  if (r.caps().char_p_perfect) {
    for (int i = 0; i <= n; ++i) out.push_back(power(r, x[i], static_cast<unsigned long>(p)));
    return WittVec<R>(r, std::move(out));
  }
  if (n + 1 <= kMaxUniversalIndex && n <= universal_cap(p)) {
    for (int i = 0; i <= n; ++i) {
      std::vector<typename R::Elem> vars(x.components().begin(), x.components().begin() + i + 2);
      out.push_back(evaluate(frob_component(p, i), r, vars));
    }
    return WittVec<R>(r, std::move(out));
  }
  if constexpr (HasIntegralLift<R>) {
    auto L = r.lift_ring();
    using LE = decltype(r.lift(x[0]));
    std::vector<LE> lx;
    int prec = r.caps().precision.value_or(0);
    for (const auto& c : x.components()) {
      lx.push_back(r.lift(c));
      prec = std::min(prec, r.precision_of(c));
    }
    auto z = frobenius(WittVec<decltype(L)>(L, lx));
    for (const auto& c : z.components()) out.push_back(r.reduce(c, prec));
    return WittVec<R>(r, std::move(out));
  } else {
    if (!detail::can_transport(r)) fail(ErrorKind::Unsupported, "Frobenius over " + r.name());
    auto g = ghost(x);
    std::vector<typename R::Elem> s(g.components().begin() + 1, g.components().end());
    return unghost(GhostVec<R>(r, std::move(s)));
  }
}

template <NormedRing R>
WittVec<R> frobenius_iter(WittVec<R> x, int times) {
  for (int i = 0; i < times; ++i) x = frobenius(x);
  return x;
}

// |x|_W = sup_i |x_{p^i}|^{1/p^i}
template <NormedRing R>
ExtNorm witt_norm(const WittVec<R>& x) {
  ExtNorm s;
  for (int i = 0; i <= x.length_exponent(); ++i)
    s = max(s, x.ring().norm(x[i]).pow(mpq_class(mpz_class(1), ipow(x.prime(), i))));
  return s;
}

template <NormedRing R>
bool is_zero(const WittVec<R>& x) {
  for (const auto& c : x.components())
    if (!x.ring().is_zero(c)) return false;
  return true;
}

}  // namespace witt
