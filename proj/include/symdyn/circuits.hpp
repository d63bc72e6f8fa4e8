#ifndef SYMDYN_CIRCUITS_HPP
#define SYMDYN_CIRCUITS_HPP

#include <optional>

#include "symdyn/shifts.hpp"

namespace symdyn {

// A word gamma is a circuit when gamma^inf lies in the shift.
bool is_circuit(Subshift const& s, Word const& gamma);

// Some eventually periodic y != gamma^inf with gamma.y in X, if one exists.
// The returned witness is the least point of the follower set outside the
// cylinder of gamma (an exit exists iff one exists there).
std::optional<EvPeriodic> exit_of(Subshift const& s, Word const& gamma);

// A single y != gamma^inf with gamma^n y in X for all n.  Exact for finite
// presentations: the alive sets of gamma-powers form a decreasing chain that
// stabilizes, and the strong exits are the survivors of the stabilized set
// outside the cylinder of gamma.  For oracle shifts the witness is verified
// up to depth_bound/|gamma| powers only.
std::optional<EvPeriodic> strong_exit(Subshift const& s, Word const& gamma);

struct CircuitReport {
  Word gamma;
  bool circuit = false;
  std::optional<EvPeriodic> exit;
  std::optional<EvPeriodic> strong;
  bool exact = true;
  std::size_t depth = 0;
};

CircuitReport circuit_report(Subshift const& s, Word const& gamma);

}  // namespace symdyn

#endif  // SYMDYN_CIRCUITS_HPP
