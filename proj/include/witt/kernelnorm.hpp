#pragma once

#include "witt/witt_vector.hpp"

namespace witt {

// x in W_{p^j} with F(x) = 0; ghost(x) = (t, 0, ..., 0).
template <NormedRing R>
struct KernelElt {
  WittVec<R> x;
  typename R::Elem t;
  int j = 0;
};

template <NormedRing R>
KernelElt<R> kernel_element_from_w1(const R& r, const typename R::Elem& t, int j) {
  Capabilities c = r.caps();
  if (!c.p_torsion_free && !c.q_algebra)
    fail(ErrorKind::CapabilityMissing, r.name() + " is neither p-torsion-free nor a Q-algebra");
  if (j < 1) fail(ErrorKind::MalformedConfig, "kernel length exponent must be >= 1");
  std::vector<typename R::Elem> g(j + 1, r.zero());
  g[0] = t;
  WittVec<R> x = unghost(GhostVec<R>(r, std::move(g)));
  if (!is_zero(frobenius(x))) fail(ErrorKind::Incoherent, "unghosted vector is not killed by F");
  return {std::move(x), t, j};
}

struct KernelReport {
  ExtNorm w1;       // |w_1(x)| = |t|
  ExtNorm witt;     // |x|_W
  ExtNorm bound;    // p^{-1/p - ... - 1/p^j} |x|_W
  mpq_class c_exp;  // 1/p + ... + 1/p^j
  bool equal = false;
  bool bound_holds = false;
};

template <NormedRing R>
KernelReport verify_kernel_norm(const R& r, const typename R::Elem& t, int j) {
  KernelElt<R> k = kernel_element_from_w1(r, t, j);
  const long p = r.prime();
  KernelReport rep;
  for (int i = 1; i <= j; ++i) rep.c_exp += mpq_class(mpz_class(1), ipow(p, i));
  rep.c_exp.canonicalize();
  rep.w1 = r.norm(t);
  rep.witt = witt_norm(k.x);
  rep.bound = rep.witt.scaled(rep.c_exp);
  rep.equal = rep.w1 == rep.bound;
  rep.bound_holds = rep.w1 <= rep.bound;
  return rep;
}

}  // namespace witt
