#include "witt/rings/integers.hpp"

#include "witt/error.hpp"
#include "witt/gmp_util.hpp"

namespace witt {

Integers::Integers(long p) : p_(p) { require_prime(p); }

Capabilities Integers::caps() const {
  Capabilities c;
  c.p_torsion_free = true;
  c.has_pth_root_mod_p = true;
  c.multiplicative_norm = true;
  c.power_multiplicative_norm = true;
  return c;
}

ExtNorm Integers::norm(const Elem& a) const {
  if (a == 0) return ExtNorm::zero();
  return ExtNorm::from_val(vp(a, p_));
}

Integers::Elem Integers::parse(const std::string& s) const {
  mpq_class q = parse_rational(s);
  if (q.get_den() != 1) fail(ErrorKind::Parse, "not an integer: " + s);
  return q.get_num();
}

Integers::Elem Integers::divide_by_p(const Elem& a) const {
  if (!mpz_divisible_ui_p(a.get_mpz_t(), static_cast<unsigned long>(p_)))
    fail(ErrorKind::NotDivisible, a.get_str() + " is not divisible by " + std::to_string(p_));
  return a / p_;
}

std::optional<Integers::Elem> Integers::pth_root_mod_p(const Elem& a) const {
  // b^p = b mod p
  return mod_nonneg(a, p_);
}

Rationals::Rationals(long p) : p_(p) { require_prime(p); }

Capabilities Rationals::caps() const {
  Capabilities c;
  c.p_torsion_free = true;
  c.q_algebra = true;
  c.multiplicative_norm = true;
  c.power_multiplicative_norm = true;
  return c;
}

ExtNorm Rationals::norm(const Elem& a) const {
  if (a == 0) return ExtNorm::zero();
  return ExtNorm::from_val(vp(a, p_));
}

Rationals::Elem Rationals::parse(const std::string& s) const { return parse_rational(s); }

}  // namespace witt
