#include "witt/rings/mod_pm.hpp"

#include <sstream>

#include "witt/error.hpp"
#include "witt/fp_linear.hpp"
#include "witt/gmp_util.hpp"
#include "witt/term_parser.hpp"

namespace witt {

IntegersModPM::IntegersModPM(long p, int M, int k) : p_(p), M_(M) {
  require_prime(p);
  if (M < 1) fail(ErrorKind::MalformedConfig, "precision M must be >= 1");
  if (k < 0) fail(ErrorKind::MalformedConfig, "negative cyclotomic level");
  if (k == 0) {
    shape_.q = p;
    shape_.k = 0;
    shape_.n = 1;
    shape_.d = 1;
  } else {
    shape_ = CycloShape(p, k);
    piv_ = std::make_shared<PiValuation>(shape_, p);
  }
  auto pw = std::make_shared<std::vector<mpz_class>>();
  for (int i = 0; i <= M + 1; ++i) pw->push_back(ipow(p, i));
  pows_ = pw;
  auto fr = std::make_shared<std::vector<std::vector<long>>>(shape_.d, std::vector<long>(shape_.d, 0));
  for (int j = 0; j < shape_.d; ++j) {
    QVec z = k == 0 ? QVec{mpq_class(1)} : zeta_power(shape_, j * p);
    for (int i = 0; i < shape_.d; ++i) (*fr)[i][j] = reduce_rational(z[i], p).get_si();
  }
  frob_ = fr;
}

Capabilities IntegersModPM::caps() const {
  Capabilities c;
  c.has_pth_root_mod_p = true;
  c.precision = M_;
  return c;
}

std::string IntegersModPM::name() const {
  std::string base = shape_.k == 0 ? "Z" : "Z[zeta_" + std::to_string(shape_.n) + "]";
  return base + "/" + std::to_string(p_) + "^" + std::to_string(M_);
}

const mpz_class& IntegersModPM::modulus(int prec) const {
  if (prec < 0 || prec > M_ + 1) fail(ErrorKind::PrecisionExhausted, "precision out of range");
  return (*pows_)[prec];
}

IntegersModPM::Elem IntegersModPM::normalize(ZVec c, int prec) const {
  const mpz_class& m = modulus(prec);
  for (auto& x : c) x = mod_nonneg(x, m);
  return {std::move(c), prec};
}

IntegersModPM::Elem IntegersModPM::from_int(const mpz_class& n) const {
  ZVec c(shape_.d);
  c[0] = n;
  return normalize(std::move(c), M_);
}

IntegersModPM::Elem IntegersModPM::from_coeffs(const ZVec& c, int prec) const {
  if (static_cast<int>(c.size()) != shape_.d) fail(ErrorKind::MalformedConfig, "coefficient count");
  if (prec > M_) prec = M_;
  return normalize(c, prec);
}

IntegersModPM::Elem IntegersModPM::zeta(long j) const {
  if (shape_.k == 0) return one();
  QVec z = zeta_power(shape_, j);
  ZVec c(shape_.d);
  for (int i = 0; i < shape_.d; ++i) c[i] = z[i].get_num();
  return normalize(std::move(c), M_);
}

IntegersModPM::Elem IntegersModPM::add(const Elem& a, const Elem& b) const {
  ZVec c(shape_.d);
  for (int i = 0; i < shape_.d; ++i) c[i] = a.c[i] + b.c[i];
  return normalize(std::move(c), std::min(a.prec, b.prec));
}

IntegersModPM::Elem IntegersModPM::sub(const Elem& a, const Elem& b) const {
  ZVec c(shape_.d);
  for (int i = 0; i < shape_.d; ++i) c[i] = a.c[i] - b.c[i];
  return normalize(std::move(c), std::min(a.prec, b.prec));
}

IntegersModPM::Elem IntegersModPM::neg(const Elem& a) const {
  ZVec c(shape_.d);
  for (int i = 0; i < shape_.d; ++i) c[i] = -a.c[i];
  return normalize(std::move(c), a.prec);
}

IntegersModPM::Elem IntegersModPM::mul(const Elem& a, const Elem& b) const {
  int prec = std::min(a.prec, b.prec);
  if (shape_.d == 1) return normalize({a.c[0] * b.c[0]}, prec);
  return normalize(cyclo_mul(a.c, b.c, shape_), prec);
}

bool IntegersModPM::equal(const Elem& a, const Elem& b) const {
  const mpz_class& m = modulus(std::min(a.prec, b.prec));
  for (int i = 0; i < shape_.d; ++i)
    if (mod_nonneg(a.c[i] - b.c[i], m) != 0) return false;
  return true;
}

bool IntegersModPM::is_zero(const Elem& a) const {
  for (const auto& x : a.c)
    if (x != 0) return false;
  return true;
}

ExtNorm IntegersModPM::norm(const Elem& a) const {
  if (is_zero(a)) return ExtNorm::zero();
  if (shape_.d == 1) return ExtNorm::from_val(vp(a.c[0], p_));
  return ExtNorm::from_val(piv_->val(lift(a)));
}

std::string IntegersModPM::format(const Elem& a) const {
  std::ostringstream os;
  if (shape_.d == 1) {
    os << a.c[0].get_str();
  } else {
    os << "[";
    for (int i = 0; i < shape_.d; ++i) os << (i ? ", " : "") << a.c[i].get_str();
    os << "]";
  }
  if (a.prec != M_) os << " (mod " << p_ << "^" << a.prec << ")";
  return os.str();
}

IntegersModPM::Elem IntegersModPM::parse(const std::string& s) const {
  CyclotomicField f = lift_ring();
  return reduce(f.parse(s), M_);
}

IntegersModPM::Elem IntegersModPM::divide_by_p(const Elem& a) const {
  if (a.prec <= 1) fail(ErrorKind::PrecisionExhausted, "division by p at precision " + std::to_string(a.prec));
  ZVec c(shape_.d);
  for (int i = 0; i < shape_.d; ++i) {
    if (!mpz_divisible_ui_p(a.c[i].get_mpz_t(), static_cast<unsigned long>(p_)))
      fail(ErrorKind::NotDivisible, format(a) + " is not divisible by " + std::to_string(p_));
    c[i] = a.c[i] / p_;
  }
  return normalize(std::move(c), a.prec - 1);
}

std::optional<IntegersModPM::Elem> IntegersModPM::pth_root_mod_p(const Elem& a) const {
  // (sum b_j zeta^j)^p = sum b_j zeta^{pj} mod p, an F_p-linear map
  std::vector<long> rhs(shape_.d);
  for (int i = 0; i < shape_.d; ++i) rhs[i] = mod_nonneg(a.c[i], p_).get_si();
  auto x = solve_lex_least_mod_p(*frob_, rhs, p_);
  if (!x) return std::nullopt;
  ZVec c(shape_.d);
  for (int i = 0; i < shape_.d; ++i) c[i] = (*x)[i];
  return normalize(std::move(c), M_);
}

QVec IntegersModPM::lift(const Elem& a) const {
  QVec q(shape_.d);
  for (int i = 0; i < shape_.d; ++i) q[i] = a.c[i];
  return q;
}

IntegersModPM::Elem IntegersModPM::reduce(const QVec& a, int prec) const {
  if (prec > M_) prec = M_;
  const mpz_class& m = modulus(prec);
  ZVec c(shape_.d);
  for (int i = 0; i < shape_.d; ++i) {
    if (!is_p_integral(a[i], p_)) fail(ErrorKind::IntegralityViolation, "non-integral value in reduction");
    c[i] = reduce_rational(a[i], m);
  }
  return {std::move(c), prec};
}

IntegersModPM::Elem IntegersModPM::truncate(const Elem& a, int prec) const {
  return normalize(a.c, std::min(prec, a.prec));
}

IntegersModPM::Elem IntegersModPM::with_precision(const Elem& a, int prec) const {
  return normalize(a.c, prec);
}

}  // namespace witt
