#include "abnet/nocycle.hpp"

#include <algorithm>

#include "abnet/burning.hpp"
#include "abnet/oracle.hpp"

namespace abnet {

namespace {

bool locally_recurrent(const ProductionData& pd, const JointState& q) {
  for (std::size_t v = 0; v < q.size(); ++v) {
    const auto& rec = pd.local[v].recurrent_states;
    if (!std::binary_search(rec.begin(), rec.end(), q[v])) return false;
  }
  return true;
}

}  // namespace

NocycleBattery nocycle_battery(const NetworkSpec& net, const ProductionData& pd) {
  if (!halting_check(pd.laplacian).halts) fail(ErrorKind::non_halting, "the network does not halt on all inputs");
  NocycleBattery b;

  try {
    const GlobalMonoid gm = global_monoid(net);
    bool all = true;
    for (std::size_t q = 0; q < gm.states.size() && all; ++q)
      if (locally_recurrent(pd, gm.states.decode(q)))
        all = std::binary_search(gm.recurrent.begin(), gm.recurrent.end(), static_cast<StateId>(q));
    b.locally_rec_implies_rec = all;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::oracle_unavailable) throw;
  }

  b.detl_eq_detd = det_exact(pd.laplacian) == det_exact(pd.reset_matrix());

  const NetworkSpec sand = sandpilize(pd);
  const ProductionData sand_pd = production_data(sand);
  const BurningCertificate cert = burning_element(sand_pd);
  b.zero_state_rec = is_recurrent(sand, sand_pd, sand.zero_state(), cert).recurrent;
  try {
    bool all = true;
    for (const auto& q : all_states(sand))
      if (!is_recurrent(sand, sand_pd, q, cert).recurrent) {
        all = false;
        break;
      }
    b.all_sandpilization_states_rec = all;
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::oracle_unavailable) throw;
  }

  b.gamma_acyclic = production_graph_acyclic(pd);

  const std::size_t n = pd.letter_count();
  RationalMatrix power = RationalMatrix::identity(n);
  for (std::size_t k = 0; k < n; ++k) power = power * pd.production;
  b.p_nilpotent = power.is_zero();

  const bool reference = b.gamma_acyclic;
  bool agree = b.detl_eq_detd == reference && b.zero_state_rec == reference && b.p_nilpotent == reference;
  if (b.locally_rec_implies_rec) agree = agree && *b.locally_rec_implies_rec == reference;
  if (b.all_sandpilization_states_rec) agree = agree && *b.all_sandpilization_states_rec == reference;
  if (!agree) fail(ErrorKind::invariant_breach, "acyclicity conditions disagree");
  return b;
}

}  // namespace abnet
