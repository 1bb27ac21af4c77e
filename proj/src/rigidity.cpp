#include "witt/rigidity.hpp"

#include "witt/arrow.hpp"
#include "witt/sampling.hpp"

namespace witt {

namespace {

bool in_range(const WittVec<Integers>& w, long lo, long hi) {
  for (const auto& c : w.components())
    if (c < lo || c > hi) return false;
  return true;
}

}  // namespace

RigidityReport rigidity_shadow(long p, int depth, long lo, long hi, int perturbations, std::uint64_t seed) {
  if (depth < 1) fail(ErrorKind::MalformedConfig, "rigidity needs depth >= 1");
  if (lo > hi) fail(ErrorKind::MalformedConfig, "empty component range");
  Integers z(p);
  RigidityReport rep;
  std::vector<std::vector<WittVec<Integers>>> found;
  std::vector<long> digit(depth + 1, lo);
  while (true) {
    ++rep.top_levels;
    std::vector<mpz_class> comps(digit.begin(), digit.end());
    std::vector<WittVec<Integers>> lv{WittVec<Integers>(z, comps)};
    bool ok = true;
    while (ok && lv.back().length_exponent() > 0) {
      lv.push_back(frobenius(lv.back()));
      ok = in_range(lv.back(), lo, hi);
    }
    if (ok) {
      std::reverse(lv.begin(), lv.end());
      ++rep.tuples;
      for (int i = 0; i < depth; ++i) {
        mpz_class diff = lv[i][0] - lv[i + 1][0];
        if (mod_nonneg(diff, ipow(p, depth - i)) != 0) {
          ++rep.congruence_failures;
          if (!rep.first_failure)
            rep.first_failure = "level " + std::to_string(i) + " of " + to_string(lv[depth]) + ": w = " +
                                lv[i][0].get_str() + " vs " + lv[i + 1][0].get_str();
        }
      }
      found.push_back(std::move(lv));
    }
    int k = 0;
    while (k <= depth && ++digit[k] > hi) digit[k++] = lo;
    if (k > depth) break;
  }
  if (found.empty()) return rep;
  Rng g(seed);
  for (int t = 0; t < perturbations; ++t) {
    auto lv = found[uniform(g, 0, static_cast<long>(found.size()) - 1)];
    const int n = static_cast<int>(uniform(g, 0, depth - 1));
    const int i = static_cast<int>(uniform(g, 0, n));
    long delta = uniform(g, 1, hi - lo + 1) * (uniform(g, 0, 1) ? 1 : -1);
    auto c = lv[n].components();
    c[i] += delta;
    lv[n] = WittVec<Integers>(z, c);
    ++rep.perturbations;
    try {
      ArrowElt<Integers> bad(z, lv);
      if (!rep.first_failure) rep.first_failure = "perturbation accepted at level " + std::to_string(n);
    } catch (const Error& e) {
      if (e.kind() == ErrorKind::Incoherent) ++rep.perturbations_rejected;
    }
  }
  return rep;
}

}  // namespace witt
