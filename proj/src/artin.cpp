#include "witt/artin.hpp"

#include "witt/error.hpp"

namespace witt {

namespace {

bool all_bounded(const std::vector<ExtNorm>& prof) {
  for (const auto& n : prof)
    if (n > ExtNorm::one()) return false;
  return true;
}

bool is_rational(const QVec& f) {
  for (size_t i = 1; i < f.size(); ++i)
    if (f[i] != 0) return false;
  return true;
}

}  // namespace

InvariantReport ghost_constant_profile(const CyclotomicField& F, const QVec& f, int N) {
  InvariantReport rep{F.name(), F.prime(), F.format(f), N, WittVec<CyclotomicField>(F, {F.zero()}), {}, false};
  rep.profile = detail::constant_ghost_profile(F, f, N, &rep.components);
  rep.bounded = all_bounded(rep.profile);
  return rep;
}

bool ghost_constant_bounded(const Rationals& q, const mpq_class& f, int N, std::vector<ExtNorm>* profile) {
  auto prof = detail::constant_ghost_profile<Rationals>(q, f, N, nullptr);
  if (profile) *profile = prof;
  return all_bounded(prof);
}

InvariantClassification invariant_classify(const CyclotomicField& F, const QVec& f, int N) {
  const long p = F.prime();
  bool f0_is_F;
  if (F.conductor_prime() == 2 && F.level() == 2 && p != 2)
    f0_is_F = p % 4 == 1;  // p splits in Q(i)
  else if (F.conductor_prime() == p)
    f0_is_F = false;  // totally ramified
  else
    fail(ErrorKind::UnsupportedField, F.name() + " at p=" + std::to_string(p));
  InvariantClassification out{ghost_constant_profile(F, f, N)};
  out.predicted_bounded = F.is_p_integral(f) && (f0_is_F || is_rational(f));
  out.matches = out.predicted_bounded == out.report.bounded;
  return out;
}

bool teichmuller_phi_invariance(const CyclotomicField& F, const QVec& r) {
  return F.equal(power(F, r, static_cast<unsigned long>(F.prime())), r);
}

}  // namespace witt
