#pragma once

#include <gmpxx.h>

#include <string>

namespace witt {

// p-adic valuation; x must be nonzero.
long vp(const mpz_class& x, long p);
long vp(const mpq_class& x, long p);

mpz_class ipow(long base, unsigned long e);
mpz_class ipow(const mpz_class& base, unsigned long e);
mpq_class qpow(const mpq_class& base, unsigned long e);

// Representative in [0, m).
mpz_class mod_nonneg(const mpz_class& a, const mpz_class& m);

// Reduce a p-integral rational mod m = p^k; throws not-integral otherwise.
mpz_class reduce_rational(const mpq_class& a, const mpz_class& m);

bool is_p_integral(const mpq_class& a, long p);

// Throws malformed-config unless p is prime.
void require_prime(long p);

std::string to_string(const mpq_class& q);
mpq_class parse_rational(const std::string& s);

}  // namespace witt
