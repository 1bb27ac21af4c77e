#pragma once

#include <random>

#include "witt/rings/cyclotomic.hpp"
#include "witt/rings/gaussian.hpp"
#include "witt/rings/integers.hpp"
#include "witt/rings/mod_pm.hpp"
#include "witt/rings/perf_poly.hpp"

namespace witt {

using Rng = std::mt19937_64;

long uniform(Rng& g, long lo, long hi);

// Random elements with a spread of p-adic valuations.
mpz_class sample(const Integers& r, Rng& g);
mpq_class sample(const Rationals& r, Rng& g);
QVec sample(const CyclotomicField& r, Rng& g);
Gauss sample(const GaussianField& r, Rng& g);
Trunc sample(const IntegersModPM& r, Rng& g);
PerfPoly sample(const PerfPolyRing& r, Rng& g);

}  // namespace witt
