#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "abnet/processor.hpp"
#include "abnet/types.hpp"

namespace abnet {

/// An abelian network: one processor per vertex, with the alphabets of the
/// vertices partitioning the total alphabet {0, ..., letter_count-1}.
/// Construction verifies the abelian axioms and irreducibility of every vertex.
class NetworkSpec {
 public:
  NetworkSpec() = default;
  explicit NetworkSpec(std::vector<ProcessorSpec> vertices);

  std::size_t vertex_count() const noexcept { return vertices_.size(); }
  std::size_t letter_count() const noexcept { return owner_.size(); }
  const ProcessorSpec& vertex(VertexId v) const { return vertices_.at(v); }
  const std::vector<ProcessorSpec>& vertices() const noexcept { return vertices_; }
  VertexId owner(LetterId a) const { return owner_.at(a); }
  std::size_t local_index(LetterId a) const { return local_index_.at(a); }
  JointState zero_state() const { return JointState(vertices_.size(), 0); }
  /// Largest number of letters emitted by a single processing step (at least 1).
  const Int& max_step_output() const noexcept { return max_step_output_; }
  /// Product of the vertex state counts, saturating at `cap + 1`.
  std::uint64_t joint_state_count(std::uint64_t cap) const;
  void check_state(const JointState& q) const;

 private:
  std::vector<ProcessorSpec> vertices_;
  std::vector<VertexId> owner_;
  std::vector<std::size_t> local_index_;
  Int max_step_output_ = 1;
};

/// Pending letters x together with the joint state q.
struct TotalState {
  CountVector pending;
  JointState joint;
  friend bool operator==(const TotalState&, const TotalState&) = default;
};

struct StabilizationResult {
  JointState final_state;
  CountVector odometer;
  std::uint64_t rounds = 0;
};

/// Processes one letter a at its owner. With `checked`, a missing letter throws
/// ErrorKind::illegal_step; otherwise the pending count goes negative (debt).
TotalState process_letter(const NetworkSpec& net, TotalState state, LetterId a, bool checked);

/// Each processor handles exactly x_a letters a of its own; emitted letters are
/// added to the pending vector but not processed.
TotalState local_action(const NetworkSpec& net, const CountVector& x, TotalState state);

/// Runs `count` letters of the owned letter `local_letter` through one
/// processor starting at `state`; returns the final state and adds the emitted
/// letters to `emission`. Large counts are handled by jumping over the
/// periodic part of the orbit.
StateId advance(const ProcessorSpec& spec, std::size_t local_letter, StateId state, const Int& count,
                CountVector& emission);

/// 10 * (1 + |A| * max_step_output * |x|_1), saturated to 64 bits.
std::uint64_t default_round_budget(const NetworkSpec& net, const CountVector& x);

/// Parallel update from x.q until no letters are pending. Throws
/// BudgetExhausted (carrying the partial odometer) after `budget` rounds.
StabilizationResult stabilize(const NetworkSpec& net, const CountVector& x, const JointState& q,
                              std::optional<std::uint64_t> budget = std::nullopt);

struct WordResult {
  TotalState state;
  bool legal = true;
};

/// Applies the letters of `word` in order (unchecked) and reports whether the
/// execution was legal, i.e. never processed a letter that was not pending.
WordResult execute_word(const NetworkSpec& net, const std::vector<LetterId>& word, TotalState state);

/// t(k) q: the joint state reached from q after processing k_a letters a.
JointState apply_counts(const NetworkSpec& net, const JointState& q, const CountVector& k);

}  // namespace abnet
