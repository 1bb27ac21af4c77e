#include "witt/ext_norm.hpp"

#include "witt/error.hpp"

namespace witt {

ExtNorm ExtNorm::from_val(const mpq_class& v) {
  ExtNorm n;
  n.zero_ = false;
  n.val_ = v;
  n.val_.canonicalize();
  return n;
}

const mpq_class& ExtNorm::val() const {
  if (zero_) fail(ErrorKind::Unsupported, "zero norm has infinite val");
  return val_;
}

ExtNorm ExtNorm::pow(const mpq_class& e) const {
  if (zero_) return *this;
  return from_val(val_ * e);
}

ExtNorm ExtNorm::scaled(const mpq_class& c) const {
  if (zero_) return *this;
  return from_val(val_ + c);
}

ExtNorm ExtNorm::operator*(const ExtNorm& o) const {
  if (zero_ || o.zero_) return zero();
  return from_val(val_ + o.val_);
}

bool ExtNorm::operator==(const ExtNorm& o) const {
  if (zero_ || o.zero_) return zero_ == o.zero_;
  return val_ == o.val_;
}

std::strong_ordering ExtNorm::operator<=>(const ExtNorm& o) const {
  if (zero_ && o.zero_) return std::strong_ordering::equal;
  if (zero_) return std::strong_ordering::less;
  if (o.zero_) return std::strong_ordering::greater;
  int c = cmp(o.val_, val_);
  if (c < 0) return std::strong_ordering::less;
  if (c > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string ExtNorm::val_str() const { return zero_ ? "inf" : val_.get_str(); }

std::string ExtNorm::str() const {
  if (zero_) return "0";
  mpq_class e = -val_;
  if (e.get_den() == 1 && e >= 0) return "p^" + e.get_str();
  return "p^(" + e.get_str() + ")";
}

ExtNorm max(const ExtNorm& a, const ExtNorm& b) { return a < b ? b : a; }

ExtNorm sup(const std::vector<ExtNorm>& xs) {
  ExtNorm r;
  for (const auto& x : xs) r = max(r, x);
  return r;
}

}  // namespace witt
