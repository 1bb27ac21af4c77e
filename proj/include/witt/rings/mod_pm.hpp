#pragma once

#include <memory>
#include <optional>
#include <string>

#include "witt/cyclo.hpp"
#include "witt/ring.hpp"
#include "witt/rings/cyclotomic.hpp"

namespace witt {

// Element of Z[zeta_{p^k}] known modulo p^prec; coefficients in [0, p^prec).
struct Trunc {
  ZVec c;
  int prec = 0;
};

// Z/p^M, or Z[zeta_{p^k}]/p^M for k >= 1, with per-element precision.
class IntegersModPM {
 public:
  using Elem = Trunc;

  IntegersModPM(long p, int M, int k = 0);
  long prime() const { return p_; }
  int digits() const { return M_; }
  int level() const { return shape_.k; }
  int degree() const { return shape_.d; }
  Capabilities caps() const;
  std::string name() const;
  bool operator==(const IntegersModPM& o) const { return p_ == o.p_ && M_ == o.M_ && shape_ == o.shape_; }

  Elem zero() const { return from_int(0); }
  Elem one() const { return from_int(1); }
  Elem from_int(const mpz_class& n) const;
  Elem from_coeffs(const ZVec& c, int prec) const;
  Elem zeta(long j = 1) const;
  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem mul(const Elem& a, const Elem& b) const;
  bool equal(const Elem& a, const Elem& b) const;
  bool is_zero(const Elem& a) const;
  ExtNorm norm(const Elem& a) const;
  std::string format(const Elem& a) const;
  Elem parse(const std::string& s) const;

  Elem divide_by_p(const Elem& a) const;
  std::optional<Elem> pth_root_mod_p(const Elem& a) const;

  CyclotomicField lift_ring() const { return CyclotomicField(p_, shape_.k, p_); }
  QVec lift(const Elem& a) const;
  Elem reduce(const QVec& a, int prec) const;
  int precision_of(const Elem& a) const { return a.prec; }
  // Same element with precision lowered to prec.
  Elem truncate(const Elem& a, int prec) const;
  // Integral lift to the ring with one more digit (coefficients unchanged).
  Elem with_precision(const Elem& a, int prec) const;
  const mpz_class& modulus(int prec) const;

 private:
  Elem normalize(ZVec c, int prec) const;

  long p_;
  int M_;
  CycloShape shape_;
  std::shared_ptr<const std::vector<mpz_class>> pows_;
  std::shared_ptr<const PiValuation> piv_;
  // Frobenius mod p on coefficient vectors, as an F_p matrix.
  std::shared_ptr<const std::vector<std::vector<long>>> frob_;
};

}  // namespace witt
