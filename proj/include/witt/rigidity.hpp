#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace witt {

struct RigidityReport {
  long top_levels = 0;     // candidate top levels enumerated
  long tuples = 0;         // coherent tuples with every component in range
  long congruence_failures = 0;
  long perturbations = 0;
  long perturbations_rejected = 0;
  std::optional<std::string> first_failure;
  bool ok() const { return congruence_failures == 0 && perturbations_rejected == perturbations; }
};

// Every F-coherent tuple over Z with components in [lo, hi] up to the given depth, checked for
// w_{p^{-i}} = w_{p^{-i-1}} mod p^{depth - i}; then random edits of lower levels must break coherence.
RigidityReport rigidity_shadow(long p, int depth, long lo, long hi, int perturbations, std::uint64_t seed);

}  // namespace witt
