#pragma once

#include <optional>

#include "abnet/engine.hpp"
#include "abnet/spectra.hpp"

namespace abnet {

/// Six conditions that are equivalent for a halting irreducible network.
/// Entries that need an enumeration of joint states are empty when the state
/// space is too large.
struct NocycleBattery {
  std::optional<bool> locally_rec_implies_rec;        // via the global monoid
  bool detl_eq_detd = false;
  std::optional<bool> all_sandpilization_states_rec;  // burning test on every state
  bool zero_state_rec = false;                        // burning test on the zero state
  bool gamma_acyclic = false;
  bool p_nilpotent = false;  // P^|A| = 0
};

/// Evaluates every condition independently. Throws ErrorKind::non_halting
/// for non-halting networks and ErrorKind::invariant_breach when two computed
/// conditions disagree.
NocycleBattery nocycle_battery(const NetworkSpec& net, const ProductionData& pd);

}  // namespace abnet
