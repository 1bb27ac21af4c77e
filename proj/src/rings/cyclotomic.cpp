#include "witt/rings/cyclotomic.hpp"

#include <sstream>

#include "witt/error.hpp"
#include "witt/gmp_util.hpp"
#include "witt/term_parser.hpp"

namespace witt {

namespace {
CycloShape make_shape(long q, int k) {
  if (k == 0) {
    CycloShape s;
    s.q = q;
    s.k = 0;
    s.n = 1;
    s.d = 1;
    return s;
  }
  return CycloShape(q, k);
}

long mult_order(long a, long n) {
  long x = a % n, ord = 1;
  while (x != 1 % n) {
    x = x * a % n;
    ++ord;
    if (ord > n) return 0;
  }
  return ord;
}
}  // namespace

CyclotomicField::CyclotomicField(long q, int k, long p) : shape_(make_shape(q, k)), p_(p) {
  require_prime(p);
  require_prime(q);
  if (k < 0) fail(ErrorKind::MalformedConfig, "negative cyclotomic level");
  if (q == p && k >= 1) piv_ = std::make_shared<PiValuation>(shape_, p);
}

Capabilities CyclotomicField::caps() const {
  Capabilities c;
  c.p_torsion_free = true;
  c.q_algebra = true;
  c.power_multiplicative_norm = true;
  c.multiplicative_norm = shape_.k == 0 || shape_.q == p_ || mult_order(p_, shape_.n) == shape_.d;
  return c;
}

std::string CyclotomicField::name() const {
  if (shape_.k == 0) return "Q";
  return "Q(zeta_" + std::to_string(shape_.n) + ")";
}

CyclotomicField::Elem CyclotomicField::from_int(const mpz_class& n) const {
  Elem e(shape_.d);
  e[0] = n;
  return e;
}

CyclotomicField::Elem CyclotomicField::from_rational(const mpq_class& q) const {
  Elem e(shape_.d);
  e[0] = q;
  return e;
}

CyclotomicField::Elem CyclotomicField::zeta(long j) const {
  if (shape_.k == 0) return one();
  return zeta_power(shape_, j);
}

CyclotomicField::Elem CyclotomicField::add(const Elem& a, const Elem& b) const {
  Elem r(shape_.d);
  for (int i = 0; i < shape_.d; ++i) r[i] = a[i] + b[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::sub(const Elem& a, const Elem& b) const {
  Elem r(shape_.d);
  for (int i = 0; i < shape_.d; ++i) r[i] = a[i] - b[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::neg(const Elem& a) const {
  Elem r(shape_.d);
  for (int i = 0; i < shape_.d; ++i) r[i] = -a[i];
  return r;
}

CyclotomicField::Elem CyclotomicField::mul(const Elem& a, const Elem& b) const {
  return cyclo_mul(a, b, shape_);
}

bool CyclotomicField::is_zero(const Elem& a) const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

ExtNorm CyclotomicField::norm(const Elem& a) const {
  if (is_zero(a)) return ExtNorm::zero();
  if (piv_) return ExtNorm::from_val(piv_->val(a));
  // unramified (or Q): sup over places is the minimal coefficient valuation
  bool any = false;
  long m = 0;
  for (const auto& c : a) {
    if (c == 0) continue;
    long v = vp(c, p_);
    if (!any || v < m) m = v;
    any = true;
  }
  return ExtNorm::from_val(m);
}

std::string CyclotomicField::format(const Elem& a) const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < shape_.d; ++i) os << (i ? ", " : "") << a[i].get_str();
  os << "]";
  return os.str();
}

CyclotomicField::Elem CyclotomicField::parse(const std::string& s) const {
  Elem r = zero();
  for (const auto& t : parse_terms(s, "z")) {
    long e = 0;
    for (const auto& [v, ex] : t.exps) {
      if (v != "z" || ex.get_den() != 1) fail(ErrorKind::Parse, "expected powers of z in '" + s + "'");
      e += ex.get_num().get_si();
    }
    r = add(r, scale(zeta(e), t.coeff));
  }
  return r;
}

CyclotomicField::Elem CyclotomicField::divide_by_p(const Elem& a) const {
  return scale(a, mpq_class(1, p_));
}

CyclotomicField::Elem CyclotomicField::scale(const Elem& a, const mpq_class& c) const {
  Elem r(shape_.d);
  for (int i = 0; i < shape_.d; ++i) r[i] = a[i] * c;
  return r;
}

CyclotomicField::Elem CyclotomicField::inverse(const Elem& a) const {
  if (is_zero(a)) fail(ErrorKind::NotDivisible, "inverse of zero");
  // Solve a * x = 1 via the multiplication matrix.
  const int d = shape_.d;
  std::vector<std::vector<mpq_class>> m(d, std::vector<mpq_class>(d + 1));
  for (int j = 0; j < d; ++j) {
    Elem col = mul(a, zeta(j));
    for (int i = 0; i < d; ++i) m[i][j] = col[i];
  }
  m[0][d] = 1;
  for (int c = 0; c < d; ++c) {
    int piv = c;
    while (piv < d && m[piv][c] == 0) ++piv;
    if (piv == d) fail(ErrorKind::NotDivisible, "singular element");
    std::swap(m[piv], m[c]);
    mpq_class inv = 1 / m[c][c];
    for (int j = c; j <= d; ++j) m[c][j] *= inv;
    for (int r = 0; r < d; ++r) {
      if (r == c || m[r][c] == 0) continue;
      mpq_class f = m[r][c];
      for (int j = c; j <= d; ++j) m[r][j] -= f * m[c][j];
    }
  }
  Elem x(d);
  for (int i = 0; i < d; ++i) x[i] = m[i][d];
  return x;
}

CyclotomicField::Elem CyclotomicField::embed(const CyclotomicField& lower, const Elem& a) const {
  if (lower.shape_.q != shape_.q || lower.shape_.k > shape_.k)
    fail(ErrorKind::RingMismatch, "embedding needs a lower level of the same tower");
  long step = 1;
  for (int i = lower.shape_.k; i < shape_.k; ++i) step *= shape_.q;
  if (lower.shape_.k == 0) step = 0;
  QVec big(std::max<long>(shape_.d, (lower.shape_.d - 1) * step + 1));
  for (int i = 0; i < lower.shape_.d; ++i) big[i * step] += a[i];
  return cyclo_reduce(std::move(big), shape_);
}

bool CyclotomicField::is_p_integral(const Elem& a) const {
  for (const auto& c : a)
    if (!witt::is_p_integral(c, p_)) return false;
  return true;
}

}  // namespace witt
