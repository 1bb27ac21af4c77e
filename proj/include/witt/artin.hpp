#pragma once

#include <string>
#include <vector>

#include "witt/rings/cyclotomic.hpp"
#include "witt/witt_vector.hpp"

namespace witt {

struct InvariantReport {
  std::string field;
  long p = 0;
  std::string element;
  int depth = 0;
  WittVec<CyclotomicField> components;
  // |x_{p^j}|^{1/p^j} for j = 0..depth
  std::vector<ExtNorm> profile;
  // all profile entries <= 1; evidence up to the depth only
  bool bounded = false;
  std::string verdict() const { return bounded ? "bounded" : "unbounded-growth"; }
};

namespace detail {

template <NormedRing R>
std::vector<ExtNorm> constant_ghost_profile(const R& r, const typename R::Elem& f, int N, WittVec<R>* out) {
  if (!r.caps().q_algebra) fail(ErrorKind::CapabilityMissing, r.name() + " is not a Q-algebra");
  if (N < 0) fail(ErrorKind::MalformedConfig, "negative depth");
  WittVec<R> x = unghost(GhostVec<R>(r, std::vector<typename R::Elem>(N + 1, f)));
  std::vector<ExtNorm> prof;
  for (int j = 0; j <= N; ++j) prof.push_back(r.norm(x[j]).pow(mpq_class(mpz_class(1), ipow(r.prime(), j))));
  if (out) *out = x;
  return prof;
}

}  // namespace detail

// Witt vector of length p^N with every ghost component equal to f, and its norm profile.
InvariantReport ghost_constant_profile(const CyclotomicField& F, const QVec& f, int N);

// Same profile over Q; returns whether it stays <= 1.
bool ghost_constant_bounded(const Rationals& q, const mpq_class& f, int N, std::vector<ExtNorm>* profile = nullptr);

struct InvariantClassification {
  InvariantReport report;
  // f in the ring of p-integers of the largest subfield F_0 that is Q_p at every place above p
  bool predicted_bounded = false;
  bool matches = false;
};

// Q(i) at an odd p, or Q(zeta_{p^k}) at its own p.
InvariantClassification invariant_classify(const CyclotomicField& F, const QVec& f, int N);

// r^p = r: the ghost components of [r] are then constant.
bool teichmuller_phi_invariance(const CyclotomicField& F, const QVec& r);

}  // namespace witt
