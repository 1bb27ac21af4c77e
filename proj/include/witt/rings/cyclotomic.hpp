#pragma once

#include <memory>
#include <optional>
#include <string>

#include "witt/cyclo.hpp"
#include "witt/ring.hpp"

namespace witt {

// Q(zeta_{q^k}) with the sup of the p-adic norms over places above p.
// k = 0 is allowed and gives Q.
class CyclotomicField {
 public:
  using Elem = QVec;

  CyclotomicField(long q, int k, long p);
  long prime() const { return p_; }
  long conductor_prime() const { return shape_.q; }
  int level() const { return shape_.k; }
  int degree() const { return shape_.d; }
  const CycloShape& shape() const { return shape_; }
  Capabilities caps() const;
  std::string name() const;
  bool operator==(const CyclotomicField& o) const { return shape_ == o.shape_ && p_ == o.p_; }

  Elem zero() const { return Elem(shape_.d); }
  Elem one() const { return from_int(1); }
  Elem from_int(const mpz_class& n) const;
  Elem from_rational(const mpq_class& q) const;
  Elem zeta(long j = 1) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool equal(const Elem& a, const Elem& b) const { return a == b; }
  bool is_zero(const Elem& a) const;
  ExtNorm norm(const Elem& a) const;
  std::string format(const Elem& a) const;
  Elem parse(const std::string& s) const;

  Elem divide_by_p(const Elem& a) const;
  Elem scale(const Elem& a, const mpq_class& c) const;
  // exact inverse of a nonzero element
  Elem inverse(const Elem& a) const;
  // Image of an element of a lower level of the same tower.
  Elem embed(const CyclotomicField& lower, const Elem& a) const;
  bool is_p_integral(const Elem& a) const;

 private:
  CycloShape shape_;
  long p_;
  std::shared_ptr<const PiValuation> piv_;
};

}  // namespace witt
