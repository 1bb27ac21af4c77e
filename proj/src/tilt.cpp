#include "witt/tilt.hpp"

#include <sstream>

#include "witt/error.hpp"
#include "witt/gmp_util.hpp"

namespace witt {

namespace {

// a^{p^l} with the precision that a^{p^l} actually carries: e + l, capped at M.
Trunc raise(const IntegersModPM& r, const Trunc& a, int l) {
  if (l == 0) return a;
  Trunc full = r.with_precision(a, r.digits());
  Trunc out = power(r, full, ipow(r.prime(), l));
  return r.truncate(out, std::min(r.digits(), a.prec + l));
}

std::string trim(const std::string& s) {
  size_t b = s.find_first_not_of(" \t");
  size_t e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

}  // namespace

TiltRing::TiltRing(IntegersModPM base, int depth) : base_(std::move(base)), depth_(depth) {
  if (depth < 0) fail(ErrorKind::MalformedConfig, "negative tilt depth");
}

Capabilities TiltRing::caps() const {
  Capabilities c;
  c.char_p_perfect = true;
  c.multiplicative_norm = true;
  c.power_multiplicative_norm = true;
  return c;
}

std::string TiltRing::name() const {
  return "tilt(" + base_.name() + ", depth " + std::to_string(depth_) + ")";
}

TiltElt TiltRing::from_int(const mpz_class& n) const {
  const int M = base_.digits();
  Trunc t = power(base_, base_.from_int(n), ipow(prime(), M));
  return {std::vector<Trunc>(depth_ + 1, t)};
}

TiltElt TiltRing::make(std::vector<Trunc> seq) const {
  if (static_cast<int>(seq.size()) != depth_ + 1)
    fail(ErrorKind::LengthMismatch, "tilt element needs " + std::to_string(depth_ + 1) + " entries");
  for (int m = 0; m < depth_; ++m)
    if (!base_.equal(raise(base_, seq[m + 1], 1), seq[m]))
      fail(ErrorKind::Incoherent, "entry " + std::to_string(m + 1) + " is not a p-th root of entry " +
                                      std::to_string(m));
  return {std::move(seq)};
}

TiltElt TiltRing::from_top(const Trunc& top) const {
  std::vector<Trunc> seq(depth_ + 1);
  for (int m = 0; m <= depth_; ++m) seq[m] = raise(base_, top, depth_ - m);
  return {std::move(seq)};
}

TiltElt TiltRing::add(const TiltElt& a, const TiltElt& b) const {
  const int M = base_.digits();
  std::vector<Trunc> out(depth_ + 1);
  for (int m = 0; m <= depth_; ++m) {
    const int l = std::min(M, depth_ - m);
    Trunc s = base_.add(a.seq[m + l], b.seq[m + l]);
    Trunc z = raise(base_, s, l);
    out[m] = base_.truncate(z, std::min(M, l + 1));
  }
  return {std::move(out)};
}

TiltElt TiltRing::neg(const TiltElt& a) const {
  if (prime() == 2) return a;
  std::vector<Trunc> out;
  for (const auto& t : a.seq) out.push_back(base_.neg(t));
  return {std::move(out)};
}

TiltElt TiltRing::sub(const TiltElt& a, const TiltElt& b) const { return add(a, neg(b)); }

TiltElt TiltRing::mul(const TiltElt& a, const TiltElt& b) const {
  std::vector<Trunc> out;
  for (int m = 0; m <= depth_; ++m) out.push_back(base_.mul(a.seq[m], b.seq[m]));
  return {std::move(out)};
}

bool TiltRing::equal(const TiltElt& a, const TiltElt& b) const {
  for (int m = 0; m <= depth_; ++m)
    if (!base_.equal(a.seq[m], b.seq[m])) return false;
  return true;
}

bool TiltRing::is_zero(const TiltElt& a) const {
  for (const auto& t : a.seq)
    if (!base_.is_zero(t)) return false;
  return true;
}

ExtNorm TiltRing::norm(const TiltElt& a) const {
  for (int m = 0; m <= depth_; ++m)
    if (!base_.is_zero(a.seq[m])) return base_.norm(a.seq[m]).pow(mpq_class(ipow(prime(), m)));
  return ExtNorm::zero();
}

std::string TiltRing::format(const TiltElt& a) const {
  std::ostringstream os;
  os << "[";
  for (size_t m = 0; m < a.seq.size(); ++m) os << (m ? "; " : "") << base_.format(a.seq[m]);
  os << "]";
  return os.str();
}

TiltElt TiltRing::parse(const std::string& s) const {
  std::string t = trim(s);
  if (t.empty()) fail(ErrorKind::Parse, "empty tilt element");
  if (t.find(';') == std::string::npos) return from_top(base_.parse(t));
  if (t.front() != '[' || t.back() != ']') fail(ErrorKind::Parse, "tilt element must be [a0; ...; aD]");
  std::vector<Trunc> seq;
  std::stringstream ss(t.substr(1, t.size() - 2));
  std::string item;
  while (std::getline(ss, item, ';')) seq.push_back(base_.parse(trim(item)));
  return make(std::move(seq));
}

TiltElt TiltRing::frobenius(const TiltElt& a) const {
  std::vector<Trunc> out(depth_ + 1);
  out[0] = raise(base_, a.seq[0], 1);
  for (int m = 1; m <= depth_; ++m) out[m] = a.seq[m - 1];
  return {std::move(out)};
}

TiltRing TiltRing::shallower() const {
  if (depth_ == 0) fail(ErrorKind::DepthExceeded, "tilt depth 0 has no inverse Frobenius");
  return TiltRing(base_, depth_ - 1);
}

TiltElt TiltRing::inverse_frobenius(const TiltElt& a) const {
  if (depth_ == 0) fail(ErrorKind::DepthExceeded, "tilt depth 0 has no inverse Frobenius");
  return {std::vector<Trunc>(a.seq.begin() + 1, a.seq.end())};
}

DlzReport dlz_classify(const WittVec<PerfPolyRing>& x, long C, long D) {
  const PerfPolyRing& r = x.ring();
  const long p = r.prime();
  DlzReport rep;
  rep.degree_condition = true;
  for (int j = 0; j <= x.length_exponent(); ++j) {
    if (r.is_zero(x[j])) continue;
    mpz_class pj = ipow(p, j);
    if (r.degree(x[j]) > mpq_class(C * j * pj + D * pj)) rep.degree_condition = false;
  }
  rep.norm_condition = charp_growth(x, mpq_class(C)) <= ExtNorm::from_val(-D);
  return rep;
}

ArrowElt<IntegersModPM> untilt(const WittVec<TiltRing>& x, int depth) {
  const TiltRing& t = x.ring();
  const int len = x.length_exponent();
  if (depth < 0) fail(ErrorKind::MalformedConfig, "negative depth");
  if (t.depth() < depth + len)
    fail(ErrorKind::InsufficientDepth, "tilt depth " + std::to_string(t.depth()) + " < " +
                                           std::to_string(depth + len));
  const IntegersModPM& r = t.base();
  std::optional<ArrowElt<IntegersModPM>> acc;
  for (int n = 0; n <= len; ++n) {
    std::vector<Trunc> roots(x[n].seq.begin() + n, x[n].seq.begin() + n + depth + 1);
    auto term = arrow_scale(arrow_teichmuller(r, roots), ipow(r.prime(), n));
    acc = acc ? arrow_add(*acc, term) : term;
  }
  return *acc;
}

UntiltNorms untilt_norms(const WittVec<TiltRing>& x, int depth, const mpq_class& b) {
  if (b <= 0 || b > 1) fail(ErrorKind::BOutOfRange, "untilt comparison needs 0 < b <= 1");
  return {arrow_norm(untilt(x, depth), b), charp_overconv_norm(x, b)};
}

}  // namespace witt
