#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "witt/ring.hpp"

namespace witt {

// Exponents are stored multiplied by p^depth, so x^{1/p^depth} has exponent 1.
using PerfPoly = std::map<std::vector<long>, long>;

// F_p[x_1^{1/p^inf}, ..., x_r^{1/p^inf}] truncated at root depth d, with |f| = p^{deg f}.
class PerfPolyRing {
 public:
  using Elem = PerfPoly;

  PerfPolyRing(long p, int vars, int depth);
  long prime() const { return p_; }
  int vars() const { return r_; }
  int depth() const { return depth_; }
  long denominator() const { return den_; }
  Capabilities caps() const;
  std::string name() const;
  bool operator==(const PerfPolyRing&) const = default;

  Elem zero() const { return {}; }
  Elem one() const { return from_int(1); }
  Elem from_int(const mpz_class& n) const;
  // c * x_1^{e_1} ... with rational exponents
  Elem monomial(long c, const std::vector<mpq_class>& exps) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const { return a.empty(); }
  ExtNorm norm(const Elem& a) const;
  // total degree as a rational; zero polynomial has none
  mpq_class degree(const Elem& a) const;
  std::string format(const Elem& a) const;
  Elem parse(const std::string& s) const;

  // Exact p-th root (the ring is perfect up to the depth bound).
  std::optional<Elem> pth_root(const Elem& a) const;
  std::optional<Elem> pth_root_mod_p(const Elem& a) const { return pth_root(a); }
  Elem frobenius(const Elem& a) const;

 private:
  long md(long c) const { return ((c % p_) + p_) % p_; }
  void put(Elem& e, const std::vector<long>& m, long c) const;

  long p_;
  int r_;
  int depth_;
  long den_;
};

}  // namespace witt
