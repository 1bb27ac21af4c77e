#include "witt/gmp_util.hpp"

#include <cctype>

#include "witt/error.hpp"

namespace witt {

long vp(const mpz_class& x, long p) {
  if (x == 0) fail(ErrorKind::NotIntegral, "valuation of zero");
  mpz_class q = x;
  long v = 0;
  while (mpz_divisible_ui_p(q.get_mpz_t(), static_cast<unsigned long>(p))) {
    mpz_divexact_ui(q.get_mpz_t(), q.get_mpz_t(), static_cast<unsigned long>(p));
    ++v;
  }
  return v;
}

long vp(const mpq_class& x, long p) {
  return vp(mpz_class(x.get_num()), p) - vp(mpz_class(x.get_den()), p);
}

mpz_class ipow(long base, unsigned long e) {
  mpz_class r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(base < 0 ? -base : base), e);
  if (base < 0 && (e & 1)) r = -r;
  return r;
}

mpz_class ipow(const mpz_class& base, unsigned long e) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

mpq_class qpow(const mpq_class& base, unsigned long e) {
  mpq_class r(ipow(mpz_class(base.get_num()), e), ipow(mpz_class(base.get_den()), e));
  r.canonicalize();
  return r;
}

mpz_class mod_nonneg(const mpz_class& a, const mpz_class& m) {
  mpz_class r;
  mpz_mod(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
  return r;
}

mpz_class reduce_rational(const mpq_class& a, const mpz_class& m) {
  mpz_class inv;
  mpz_class den = a.get_den();
  if (m == 1) return 0;
  if (mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t()) == 0)
    fail(ErrorKind::NotIntegral, "denominator " + den.get_str() + " not invertible");
  return mod_nonneg(mpz_class(a.get_num()) * inv, m);
}

bool is_p_integral(const mpq_class& a, long p) {
  return !mpz_divisible_ui_p(a.get_den_mpz_t(), static_cast<unsigned long>(p));
}

void require_prime(long p) {
  if (p < 2) fail(ErrorKind::MalformedConfig, "p must be a prime >= 2");
  for (long d = 2; d * d <= p; ++d)
    if (p % d == 0) fail(ErrorKind::MalformedConfig, std::to_string(p) + " is not prime");
}

std::string to_string(const mpq_class& q) { return q.get_str(); }

mpq_class parse_rational(const std::string& raw) {
  std::string s;
  for (char c : raw)
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  if (s.empty()) fail(ErrorKind::Parse, "empty number");
  auto valid = [](const std::string& t) {
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  auto slash = s.find('/');
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!valid(num) || !valid(den)) fail(ErrorKind::Parse, "bad rational '" + raw + "'");
  if (num[0] == '+') num = num.substr(1);
  if (den[0] == '+') den = den.substr(1);
  mpz_class dz(den);
  if (dz == 0) fail(ErrorKind::Parse, "zero denominator");
  mpq_class q{mpz_class(num), dz};
  q.canonicalize();
  return q;
}

}  // namespace witt
