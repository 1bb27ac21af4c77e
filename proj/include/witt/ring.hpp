#pragma once

#include <gmpxx.h>

#include <concepts>
#include <optional>
#include <string>

#include "witt/ext_norm.hpp"

namespace witt {

struct Capabilities {
  bool p_torsion_free = false;
  bool q_algebra = false;
  bool has_pth_root_mod_p = false;
  bool char_p_perfect = false;
  std::optional<int> precision;
  bool multiplicative_norm = false;
  bool power_multiplicative_norm = false;
};

template <class R>
concept NormedRing = std::equality_comparable<R> &&
    requires(const R& r, const typename R::Elem& a, const mpz_class& n, const std::string& s) {
  { r.prime() } -> std::convertible_to<long>;
  { r.caps() } -> std::same_as<Capabilities>;
  { r.name() } -> std::convertible_to<std::string>;
  { r.zero() } -> std::same_as<typename R::Elem>;
  { r.one() } -> std::same_as<typename R::Elem>;
  { r.from_int(n) } -> std::same_as<typename R::Elem>;
  { r.add(a, a) } -> std::same_as<typename R::Elem>;
  { r.sub(a, a) } -> std::same_as<typename R::Elem>;
  { r.neg(a) } -> std::same_as<typename R::Elem>;
  { r.mul(a, a) } -> std::same_as<typename R::Elem>;
  { r.equal(a, a) } -> std::same_as<bool>;
  { r.is_zero(a) } -> std::same_as<bool>;
  { r.norm(a) } -> std::same_as<ExtNorm>;
  { r.format(a) } -> std::convertible_to<std::string>;
  { r.parse(s) } -> std::same_as<typename R::Elem>;
};

template <class R>
concept DividesByP = NormedRing<R> && requires(const R& r, const typename R::Elem& a) {
  { r.divide_by_p(a) } -> std::same_as<typename R::Elem>;
};

template <class R>
concept HasPthRoot = NormedRing<R> && requires(const R& r, const typename R::Elem& a) {
  { r.pth_root_mod_p(a) } -> std::same_as<std::optional<typename R::Elem>>;
};

// Truncated rings that name an integral cover to compute in.
template <class R>
concept HasIntegralLift = NormedRing<R> && requires(const R& r, const typename R::Elem& a) {
  r.lift_ring();
  r.lift(a);
  { r.reduce(r.lift(a), 1) } -> std::same_as<typename R::Elem>;
  { r.precision_of(a) } -> std::convertible_to<int>;
};

template <NormedRing R>
typename R::Elem power(const R& r, const typename R::Elem& a, const mpz_class& e) {
  typename R::Elem result = r.one();
  typename R::Elem base = a;
  mpz_class k = e;
  while (k > 0) {
    if (mpz_odd_p(k.get_mpz_t())) result = r.mul(result, base);
    k >>= 1;
    if (k > 0) base = r.mul(base, base);
  }
  return result;
}

template <NormedRing R>
typename R::Elem power(const R& r, const typename R::Elem& a, unsigned long e) {
  return power(r, a, mpz_class(e));
}

template <NormedRing R>
typename R::Elem scale(const R& r, const typename R::Elem& a, const mpz_class& n) {
  if (n == 1) return a;
  return r.mul(r.from_int(n), a);
}

}  // namespace witt
