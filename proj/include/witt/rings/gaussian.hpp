#pragma once

#include <gmpxx.h>

#include <string>

#include "witt/ring.hpp"

namespace witt {

struct Gauss {
  mpq_class re;
  mpq_class im;
  bool operator==(const Gauss&) const = default;
};

// Q(i) with the sup of the p-adic norms over the places above p.
class GaussianField {
 public:
  using Elem = Gauss;

  explicit GaussianField(long p);
  long prime() const { return p_; }
  Capabilities caps() const;
  std::string name() const { return "Q(i)"; }
  bool operator==(const GaussianField& o) const { return p_ == o.p_; }

  Elem zero() const { return {0, 0}; }
  Elem one() const { return {1, 0}; }
  Elem from_int(const mpz_class& n) const { return {mpq_class(n), 0}; }
  Elem i() const { return {0, 1}; }
  Elem add(const Elem& a, const Elem& b) const { return {a.re + b.re, a.im + b.im}; }
  Elem sub(const Elem& a, const Elem& b) const { return {a.re - b.re, a.im - b.im}; }
  Elem neg(const Elem& a) const { return {-a.re, -a.im}; }
  Elem mul(const Elem& a, const Elem& b) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a.re == 0 && a.im == 0; }
  ExtNorm norm(const Elem& a) const;
  std::string format(const Elem& a) const;
  Elem parse(const std::string& s) const;

  Elem divide_by_p(const Elem& a) const { return {a.re / p_, a.im / p_}; }

  // Valuations at the primes above p, normalized so v(p) = 1 at each.
  // Split p gives two values (pi, conj pi); otherwise one.
  std::vector<mpq_class> place_vals(const Elem& a) const;
  // The prime element pi with pi * conj(pi) = p (split case), or 1+i for p = 2.
  Elem prime_element() const { return pi_; }

 private:
  long pi_val(const Elem& a, const Elem& pi) const;

  long p_;
  Elem pi_;
};

}  // namespace witt
