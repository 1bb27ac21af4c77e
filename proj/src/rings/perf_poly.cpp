#include "witt/rings/perf_poly.hpp"

#include <sstream>

#include "witt/error.hpp"
#include "witt/gmp_util.hpp"
#include "witt/term_parser.hpp"

namespace witt {

PerfPolyRing::PerfPolyRing(long p, int vars, int depth) : p_(p), r_(vars), depth_(depth) {
  require_prime(p);
  if (vars < 1 || depth < 0 || depth > 30) fail(ErrorKind::MalformedConfig, "bad perfected polynomial ring");
  den_ = 1;
  for (int i = 0; i < depth; ++i) den_ *= p;
}

Capabilities PerfPolyRing::caps() const {
  Capabilities c;
  c.has_pth_root_mod_p = true;
  c.char_p_perfect = true;
  c.multiplicative_norm = true;
  c.power_multiplicative_norm = true;
  return c;
}

std::string PerfPolyRing::name() const {
  return "F_" + std::to_string(p_) + "[x^(1/" + std::to_string(p_) + "^" + std::to_string(depth_) + ")]" +
         (r_ > 1 ? "^" + std::to_string(r_) : "");
}

void PerfPolyRing::put(Elem& e, const std::vector<long>& m, long c) const {
  c = md(c);
  if (c == 0) return;
  auto it = e.find(m);
  if (it == e.end()) {
    e.emplace(m, c);
    return;
  }
  it->second = md(it->second + c);
  if (it->second == 0) e.erase(it);
}

PerfPolyRing::Elem PerfPolyRing::from_int(const mpz_class& n) const {
  Elem e;
  put(e, std::vector<long>(r_, 0), mod_nonneg(n, p_).get_si());
  return e;
}

PerfPolyRing::Elem PerfPolyRing::monomial(long c, const std::vector<mpq_class>& exps) const {
  if (static_cast<int>(exps.size()) != r_) fail(ErrorKind::MalformedConfig, "variable count");
  std::vector<long> m(r_);
  for (int i = 0; i < r_; ++i) {
    mpq_class s = exps[i] * den_;
    if (s.get_den() != 1 || s < 0) fail(ErrorKind::DepthExceeded, "exponent beyond root depth");
    m[i] = s.get_num().get_si();
  }
  Elem e;
  put(e, m, c);
  return e;
}

PerfPolyRing::Elem PerfPolyRing::add(const Elem& a, const Elem& b) const {
  Elem r = a;
  for (const auto& [m, c] : b) put(r, m, c);
  return r;
}

PerfPolyRing::Elem PerfPolyRing::neg(const Elem& a) const {
  Elem r;
  for (const auto& [m, c] : a) put(r, m, -c);
  return r;
}

PerfPolyRing::Elem PerfPolyRing::sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }

PerfPolyRing::Elem PerfPolyRing::mul(const Elem& a, const Elem& b) const {
  Elem r;
  std::vector<long> m(r_);
  for (const auto& [ma, ca] : a)
    for (const auto& [mb, cb] : b) {
      for (int i = 0; i < r_; ++i) m[i] = ma[i] + mb[i];
      put(r, m, ca * cb);
    }
  return r;
}

mpq_class PerfPolyRing::degree(const Elem& a) const {
  if (a.empty()) fail(ErrorKind::Unsupported, "degree of zero");
  long best = -1;
  for (const auto& [m, c] : a) {
    long s = 0;
    for (long x : m) s += x;
    best = std::max(best, s);
  }
  mpq_class d(best, den_);
  d.canonicalize();
  return d;
}

ExtNorm PerfPolyRing::norm(const Elem& a) const {
  if (a.empty()) return ExtNorm::zero();
  return ExtNorm::from_val(-degree(a));
}

std::string PerfPolyRing::format(const Elem& a) const {
  if (a.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  // highest degree first
  for (auto it = a.rbegin(); it != a.rend(); ++it) {
    const auto& [m, c] = *it;
    if (!first) os << " + ";
    first = false;
    std::vector<std::string> factors;
    bool constant = true;
    for (int i = 0; i < r_; ++i) {
      if (m[i] == 0) continue;
      constant = false;
      std::string v = r_ == 1 ? "x" : "x" + std::to_string(i + 1);
      mpq_class e(m[i], den_);
      e.canonicalize();
      if (e != 1) v += e.get_den() == 1 ? "^" + e.get_str() : "^(" + e.get_str() + ")";
      factors.push_back(v);
    }
    if (constant || c != 1) factors.insert(factors.begin(), std::to_string(c));
    for (size_t i = 0; i < factors.size(); ++i) os << (i ? "*" : "") << factors[i];
  }
  return os.str();
}

PerfPolyRing::Elem PerfPolyRing::parse(const std::string& s) const {
  Elem r;
  for (const auto& t : parse_terms(s, "x")) {
    std::vector<mpq_class> exps(r_);
    for (const auto& [v, e] : t.exps) {
      int idx = -1;
      if (v == "x" && r_ == 1) idx = 0;
      else if (v.size() > 1 && v[0] == 'x') idx = std::stoi(v.substr(1)) - 1;
      if (idx < 0 || idx >= r_) fail(ErrorKind::Parse, "unknown variable " + v);
      exps[idx] += e;
    }
    if (t.coeff.get_den() != 1) fail(ErrorKind::Parse, "coefficients must be integers");
    r = add(r, monomial(mod_nonneg(t.coeff.get_num(), p_).get_si(), exps));
  }
  return r;
}

std::optional<PerfPolyRing::Elem> PerfPolyRing::pth_root(const Elem& a) const {
  Elem r;
  for (const auto& [m, c] : a) {
    std::vector<long> q(r_);
    for (int i = 0; i < r_; ++i) {
      if (m[i] % p_ != 0) return std::nullopt;
      q[i] = m[i] / p_;
    }
    put(r, q, c);  // c^p = c in F_p
  }
  return r;
}

PerfPolyRing::Elem PerfPolyRing::frobenius(const Elem& a) const {
  Elem r;
  for (const auto& [m, c] : a) {
    std::vector<long> q(r_);
    for (int i = 0; i < r_; ++i) q[i] = m[i] * p_;
    put(r, q, c);
  }
  return r;
}

}  // namespace witt
