#pragma once

// Brute-force ground truth for small networks: the global monoid generated by
// the maps q -> 1_a >> q, its minimal idempotent and group part, and exact
// averages over the recurrent states.

#include <cstddef>
#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "abnet/engine.hpp"
#include "abnet/lattice.hpp"
#include "abnet/monoid.hpp"
#include "abnet/spectra.hpp"

namespace abnet {

inline constexpr std::size_t kOracleStateCap = 20'000;
inline constexpr std::size_t kOracleMonoidCap = 50'000;
inline constexpr std::size_t kOracleEntryCap = std::size_t(1) << 24;

/// Mixed-radix numbering of joint states (vertex 0 is the least significant digit).
class StateIndexer {
 public:
  StateIndexer() = default;
  explicit StateIndexer(const NetworkSpec& net, std::size_t cap = kOracleStateCap);
  std::size_t size() const noexcept { return size_; }
  std::size_t encode(const JointState& q) const;
  JointState decode(std::size_t index) const;

 private:
  std::vector<std::size_t> radix_;
  std::size_t size_ = 0;
};

struct GlobalMonoid {
  StateIndexer states;
  TransformationMonoid monoid;
  std::vector<std::size_t> generators;  // element index of tau_a, per letter
  Transformation idempotent;            // e
  std::vector<StateId> recurrent;       // eQ as sorted state indices
  /// eM, each element stored as a permutation of positions in `recurrent`.
  std::vector<std::vector<std::size_t>> group;
  std::size_t group_identity = 0;

  const Transformation& tau(LetterId a) const { return monoid.element(generators.at(a)); }
};

/// Throws ErrorKind::non_halting if the halting certificate fails and
/// ErrorKind::oracle_unavailable when a cap is exceeded.
GlobalMonoid global_monoid(const NetworkSpec& net, std::size_t state_cap = kOracleStateCap,
                           std::size_t monoid_cap = kOracleMonoidCap);

/// The map q -> x >> q on all states.
Transformation global_map(const NetworkSpec& net, const GlobalMonoid& gm, const CountVector& x);

/// Recurrent states, after checking that the five equivalent conditions
/// (x in My for all y; x in M(mx) for all m; x in mX for all m; x in eX;
/// x = ex) select the same set. Throws ErrorKind::invariant_breach otherwise.
std::vector<JointState> recurrent_states(const GlobalMonoid& gm);

/// Invariant factors of eM, from counting elements of prime-power order.
GroupDesc crit_group_oracle(const GlobalMonoid& gm);

/// eM acts freely and transitively on eQ.
bool free_and_transitive(const GlobalMonoid& gm);

/// Every tau_a permutes eQ.
bool generators_permute_recurrent(const GlobalMonoid& gm);

/// Throws ErrorKind::invalid_argument unless alpha is a probability vector over the alphabet.
void check_distribution(const NetworkSpec& net, const std::vector<double>& alpha);

/// q -> 1_a >> q with a drawn from alpha.
JointState markov_step(const NetworkSpec& net, const std::vector<double>& alpha, const JointState& q,
                       std::mt19937_64& rng);

struct MarkovRun {
  std::vector<JointState> trajectory;           // first states, starting with q0
  std::map<JointState, std::uint64_t> visits;   // states after steps 1..n
  JointState final_state;
};

MarkovRun run_markov(const NetworkSpec& net, const std::vector<double>& alpha, const JointState& q0,
                     std::uint64_t steps, std::uint64_t seed, std::size_t trajectory_limit = 32);

/// e_alpha M_alpha equals eM, where M_alpha is generated by the supported tau_a.
bool adequate_support(const GlobalMonoid& gm, const std::vector<double>& alpha);

/// Exact mean of the odometer of x over the recurrent states.
RationalVector expected_odometer_exact(const NetworkSpec& net, const GlobalMonoid& gm, const CountVector& x);

/// (I - P)^{-1} x.
RationalVector mean_odometer(const ProductionData& pd, const CountVector& x);

/// max over inputs and states of |[x.q] - (I - P)^{-1} x|_inf.
Rational deviation_scan(const NetworkSpec& net, const ProductionData& pd, const std::vector<CountVector>& inputs,
                        const std::vector<JointState>& states);

/// All joint states of the network (requires a small state space).
std::vector<JointState> all_states(const NetworkSpec& net, std::size_t cap = kOracleStateCap);

/// z >= x with tau(z) = e, found as a multiple of x + 1.
CountVector dominating_idempotent_input(const NetworkSpec& net, const GlobalMonoid& gm, const CountVector& x);

}  // namespace abnet
