#pragma once

#include <optional>
#include <string>
#include <vector>

#include "witt/rings/cyclotomic.hpp"
#include "witt/rings/mod_pm.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

// b with b^p = a (mod p), or b^p = pa (mod p^2).
struct RootWitness {
  Trunc a;
  Trunc b;
  int condition = 1;
};

struct PerfectVerdict {
  enum class Kind { Yes, No, YesUpToLevel };
  Kind kind = Kind::No;
  // highest tower index checked for YesUpToLevel
  int level = -1;
  // 1: p-th powers mod p not surjective; 2: some pa has no p-th root mod p^2
  int failed_condition = 0;
  std::optional<Trunc> counterexample;
  std::vector<RootWitness> witnesses;
  std::string ring;
  std::string verdict() const;
};

// Residues mod p of Z[zeta_{p^k}]: every vector with coefficients in [0, p).
std::vector<Trunc> residues_mod_p(const IntegersModPM& r);

// Exhaustive check of Z[zeta_{p^k}] (k = 0 gives Z) modulo p^2.
PerfectVerdict witt_perfect_test(long p, int k);

// Z[zeta_{p^{base}}] subset Z[zeta_{p^{base+1}}] subset ...: level j elements must have roots at level j+1.
PerfectVerdict witt_perfect_tower_test(long p, int base, int k);

// Lex-least b mod p in Z[zeta_{p^k}] with b^p = pa (mod p^2).
std::optional<Trunc> root_of_pa(long p, int k, const Trunc& a);

// x_1^p = p (mod p^2), x_{n+1}^p = x_n (mod p); x_n lives in Q(zeta_{p^{level(n)}}).
class RootSequence {
 public:
  RootSequence(long p, std::vector<CyclotomicField> fields, std::vector<QVec> elems);
  long prime() const { return p_; }
  int size() const { return static_cast<int>(elems_.size()); }
  // 1-based, as x_1, x_2, ...
  const QVec& x(int n) const;
  const CyclotomicField& field(int n) const;

 private:
  long p_;
  std::vector<CyclotomicField> fields_;
  std::vector<QVec> elems_;
};

// Level of the cyclotomic field holding x_1 in the built sequence.
int root_sequence_base_level(long p);
RootSequence build_root_sequence(long p, int n);

struct PowerIdealSample {
  QVec x;
  bool power_in_ideal = false;  // x^{p^n} in p^m A
  bool in_ideal = false;        // x in (x_n^m, p) A
  // x = u x_n^m + p w when in_ideal
  std::optional<QVec> u, w;
  bool consistent = false;
};

// Samples live in the field of x_n; A is the p-integral elements.
std::vector<PowerIdealSample> power_ideal_check(const RootSequence& seq, int n, long m,
                                                const std::vector<QVec>& samples);

// y with F(y) = x at precision M - n - 1, built component by component.
WittVec<IntegersModPM> solve_frobenius(const WittVec<IntegersModPM>& x);

struct NormedSolution {
  WittVec<CyclotomicField> y;
  // x was replaced by [p^{-pk}] x, then by [x_n^{pm}] x
  long k = 0;
  long m = 0;
  int n = 0;
  long nodes = 0;
};

// y over a tower field with F(y) = x exactly and |y|_W^p <= |x|_W.
NormedSolution solve_frobenius_normed(const WittVec<CyclotomicField>& x, const RootSequence& seq,
                                      int max_extra_levels = 3);

}  // namespace witt
