#pragma once

#include <gmpxx.h>

#include <compare>
#include <string>
#include <vector>

namespace witt {

// Norm p^{-val}; val = +inf encodes the zero norm.
class ExtNorm {
 public:
  ExtNorm() : zero_(true) {}
  static ExtNorm zero() { return ExtNorm(); }
  static ExtNorm one() { return from_val(0); }
  static ExtNorm from_val(const mpq_class& v);

  bool is_zero() const { return zero_; }
  const mpq_class& val() const;

  // |.|^e for e > 0
  ExtNorm pow(const mpq_class& e) const;
  // p^{-c} * |.|
  ExtNorm scaled(const mpq_class& c) const;
  ExtNorm operator*(const ExtNorm& o) const;

  bool operator==(const ExtNorm& o) const;
  // Orders by magnitude of the norm.
  std::strong_ordering operator<=>(const ExtNorm& o) const;

  std::string val_str() const;
  std::string str() const;

 private:
  bool zero_;
  mpq_class val_;
};

ExtNorm max(const ExtNorm& a, const ExtNorm& b);
ExtNorm sup(const std::vector<ExtNorm>& xs);

}  // namespace witt
