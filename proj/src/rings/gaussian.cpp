#include "witt/rings/gaussian.hpp"

#include "witt/error.hpp"
#include "witt/gmp_util.hpp"
#include "witt/term_parser.hpp"

namespace witt {

GaussianField::GaussianField(long p) : p_(p) {
  require_prime(p);
  if (p == 2) {
    pi_ = {1, 1};
  } else if (p % 4 == 1) {
    for (long a = 1; a * a < p; ++a) {
      long b2 = p - a * a;
      long b = 0;
      while (b * b < b2) ++b;
      if (b * b == b2) {
        pi_ = {a, b};
        break;
      }
    }
  } else {
    pi_ = {p, 0};
  }
}

Capabilities GaussianField::caps() const {
  Capabilities c;
  c.p_torsion_free = true;
  c.q_algebra = true;
  c.power_multiplicative_norm = true;
  c.multiplicative_norm = p_ % 4 != 1;
  return c;
}

GaussianField::Elem GaussianField::mul(const Elem& a, const Elem& b) const {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

long GaussianField::pi_val(const Elem& a, const Elem& pi) const {
  // a is p-integral and not divisible by p; divide by pi while the quotient stays p-integral
  mpq_class nrm = pi.re * pi.re + pi.im * pi.im;
  Elem conj{pi.re, -pi.im};
  Elem x = a;
  long v = 0;
  while (true) {
    Elem q = mul(x, conj);
    q.re /= nrm;
    q.im /= nrm;
    if (!is_p_integral(q.re, p_) || !is_p_integral(q.im, p_)) return v;
    x = q;
    ++v;
  }
}

std::vector<mpq_class> GaussianField::place_vals(const Elem& a) const {
  if (is_zero(a)) fail(ErrorKind::Unsupported, "valuation of zero");
  long c = 0;
  bool any = false;
  for (const auto* x : {&a.re, &a.im}) {
    if (*x == 0) continue;
    long v = vp(*x, p_);
    if (!any || v < c) c = v;
    any = true;
  }
  mpq_class s = c >= 0 ? mpq_class(mpz_class(1), ipow(p_, c)) : mpq_class(ipow(p_, -c));
  Elem u{a.re * s, a.im * s};
  if (p_ == 2) return {mpq_class(2 * c + pi_val(u, pi_), 2)};
  if (p_ % 4 == 3) return {mpq_class(c)};
  Elem pibar{pi_.re, -pi_.im};
  return {mpq_class(c + pi_val(u, pi_)), mpq_class(c + pi_val(u, pibar))};
}

ExtNorm GaussianField::norm(const Elem& a) const {
  if (is_zero(a)) return ExtNorm::zero();
  auto vs = place_vals(a);
  mpq_class m = vs[0];
  for (const auto& v : vs)
    if (v < m) m = v;
  return ExtNorm::from_val(m);
}

std::string GaussianField::format(const Elem& a) const {
  if (a.im == 0) return a.re.get_str();
  std::string im = a.im == 1 ? "i" : a.im == -1 ? "-i" : a.im.get_str() + "i";
  if (a.re == 0) return im;
  return a.re.get_str() + (a.im > 0 ? "+" : "") + im;
}

GaussianField::Elem GaussianField::parse(const std::string& s) const {
  Elem r = zero();
  for (const auto& t : parse_terms(s, "i")) {
    long e = 0;
    for (const auto& [v, ex] : t.exps) {
      if (v != "i" || ex.get_den() != 1) fail(ErrorKind::Parse, "expected powers of i in '" + s + "'");
      e += ex.get_num().get_si();
    }
    e = ((e % 4) + 4) % 4;
    Elem unit = e == 0 ? Elem{1, 0} : e == 1 ? Elem{0, 1} : e == 2 ? Elem{-1, 0} : Elem{0, -1};
    r = add(r, {unit.re * t.coeff, unit.im * t.coeff});
  }
  return r;
}

}  // namespace witt
