#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>

#include "witt/ring.hpp"

namespace witt {

// Z with the p-adic norm.
class Integers {
 public:
  using Elem = mpz_class;

  explicit Integers(long p);
  long prime() const { return p_; }
  Capabilities caps() const;
  std::string name() const { return "Z"; }
  bool operator==(const Integers&) const = default;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const mpz_class& n) const { return n; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a == 0; }
  ExtNorm norm(const Elem& a) const;
  std::string format(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const;

  Elem divide_by_p(const Elem& a) const;
  std::optional<Elem> pth_root_mod_p(const Elem& a) const;

 private:
  long p_;
};

// Q with the p-adic norm.
class Rationals {
 public:
  using Elem = mpq_class;

  explicit Rationals(long p);
  long prime() const { return p_; }
  Capabilities caps() const;
  std::string name() const { return "Q"; }
  bool operator==(const Rationals&) const = default;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(const mpz_class& n) const { return mpq_class(n); }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a == 0; }
  ExtNorm norm(const Elem& a) const;
  std::string format(const Elem& a) const { return a.get_str(); }
  Elem parse(const std::string& s) const;

  Elem divide_by_p(const Elem& a) const { return a / p_; }

 private:
  long p_;
};

}  // namespace witt
