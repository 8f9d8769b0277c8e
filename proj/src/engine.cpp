#include "abnet/engine.hpp"

#include <limits>
#include <string>

namespace abnet {

NetworkSpec::NetworkSpec(std::vector<ProcessorSpec> vertices) : vertices_(std::move(vertices)) {
  std::size_t alphabet = vertices_.empty() ? 0 : vertices_.front().alphabet_size;
  owner_.assign(alphabet, std::numeric_limits<VertexId>::max());
  local_index_.assign(alphabet, 0);
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    const auto& p = vertices_[v];
    if (p.alphabet_size != alphabet) fail(ErrorKind::structural, "vertices disagree on the alphabet size");
    check_structure(p);
    for (std::size_t i = 0; i < p.letter_count(); ++i) {
      if (owner_[p.letters[i]] != std::numeric_limits<VertexId>::max())
        fail(ErrorKind::structural, "letter " + std::to_string(p.letters[i]) + " is owned by two vertices");
      owner_[p.letters[i]] = v;
      local_index_[p.letters[i]] = i;
    }
  }
  for (LetterId a = 0; a < alphabet; ++a)
    if (owner_[a] == std::numeric_limits<VertexId>::max())
      fail(ErrorKind::structural, "letter " + std::to_string(a) + " has no owner");
  for (VertexId v = 0; v < vertices_.size(); ++v) {
    const auto violations = validate_abelian(vertices_[v]);
    if (!violations.empty())
      fail(ErrorKind::validation, "vertex " + std::to_string(v) + ": " + violations.front().describe());
    if (!is_irreducible(vertices_[v])) fail(ErrorKind::validation, "vertex " + std::to_string(v) + " is reducible");
    for (const auto& row : vertices_[v].output)
      for (const auto& o : row) {
        Int total = 0;
        for (const auto& c : o) total += c;
        if (total > max_step_output_) max_step_output_ = total;
      }
  }
}

std::uint64_t NetworkSpec::joint_state_count(std::uint64_t cap) const {
  std::uint64_t n = 1;
  for (const auto& p : vertices_) {
    if (n > (cap + 1) / p.state_count) return cap + 1;
    n *= p.state_count;
  }
  return n > cap ? cap + 1 : n;
}

void NetworkSpec::check_state(const JointState& q) const {
  if (q.size() != vertices_.size()) fail(ErrorKind::structural, "joint state has the wrong number of vertices");
  for (VertexId v = 0; v < q.size(); ++v)
    if (q[v] >= vertices_[v].state_count) fail(ErrorKind::structural, "state index out of range");
}

TotalState process_letter(const NetworkSpec& net, TotalState state, LetterId a, bool checked) {
  if (a >= net.letter_count()) fail(ErrorKind::structural, "letter out of range");
  net.check_state(state.joint);
  if (checked && state.pending.at(a) < 1) fail(ErrorKind::illegal_step, "no pending letter " + std::to_string(a));
  const VertexId v = net.owner(a);
  const auto& p = net.vertex(v);
  const std::size_t i = net.local_index(a);
  const StateId q = state.joint[v];
  state.pending[a] -= 1;
  state.pending += p.output[i][q];
  state.joint[v] = p.transition[i][q];
  return state;
}

StateId advance(const ProcessorSpec& spec, std::size_t local_letter, StateId state, const Int& count,
                CountVector& emission) {
  const auto& t = spec.transition[local_letter];
  const auto& out = spec.output[local_letter];
  if (count <= 2 * spec.state_count) {
    for (Int n = 0; n < count; ++n) {
      emission += out[state];
      state = t[state];
    }
    return state;
  }
  // Orbit state -> t(state) -> ... enters a cycle after `tail` steps.
  std::vector<std::int64_t> first_visit(spec.state_count, -1);
  std::vector<StateId> orbit;
  StateId q = state;
  while (first_visit[q] < 0) {
    first_visit[q] = static_cast<std::int64_t>(orbit.size());
    orbit.push_back(q);
    q = t[q];
  }
  const std::size_t tail = static_cast<std::size_t>(first_visit[q]);
  const std::size_t period = orbit.size() - tail;
  for (std::size_t s = 0; s < tail; ++s) emission += out[orbit[s]];
  CountVector cycle_sum = zeros(spec.alphabet_size);
  for (std::size_t s = tail; s < orbit.size(); ++s) cycle_sum += out[orbit[s]];
  const Int remaining = count - tail;
  const Int full = remaining / period;
  const std::size_t rest = static_cast<std::size_t>(remaining % period);
  if (full != 0) emission += full * cycle_sum;
  for (std::size_t s = 0; s < rest; ++s) emission += out[orbit[tail + s]];
  return orbit[tail + rest];
}

TotalState local_action(const NetworkSpec& net, const CountVector& x, TotalState state) {
  if (x.size() != net.letter_count() || state.pending.size() != net.letter_count())
    fail(ErrorKind::structural, "vector length does not match the alphabet");
  if (!is_nonnegative(x)) fail(ErrorKind::invalid_argument, "local action needs a nonnegative input");
  net.check_state(state.joint);
  for (LetterId a = 0; a < net.letter_count(); ++a) {
    if (x[a] == 0) continue;
    const VertexId v = net.owner(a);
    state.joint[v] = advance(net.vertex(v), net.local_index(a), state.joint[v], x[a], state.pending);
  }
  return state;
}

std::uint64_t default_round_budget(const NetworkSpec& net, const CountVector& x) {
  Int b = 10 * (1 + Int(net.letter_count()) * net.max_step_output() * l1_norm(x));
  if (b > std::numeric_limits<std::uint64_t>::max()) return std::numeric_limits<std::uint64_t>::max();
  return b.convert_to<std::uint64_t>();
}

StabilizationResult stabilize(const NetworkSpec& net, const CountVector& x, const JointState& q,
                              std::optional<std::uint64_t> budget) {
  if (x.size() != net.letter_count()) fail(ErrorKind::structural, "input length does not match the alphabet");
  if (!is_nonnegative(x)) fail(ErrorKind::invalid_argument, "stabilization needs a nonnegative input");
  net.check_state(q);
  const std::uint64_t limit = budget.value_or(default_round_budget(net, x));
  StabilizationResult result{q, zeros(net.letter_count()), 0};
  CountVector pending = x;
  while (!is_zero(pending)) {
    if (result.rounds >= limit)
      throw BudgetExhausted("stabilization did not finish within " + std::to_string(limit) + " rounds",
                            result.odometer, result.rounds);
    result.odometer += pending;
    TotalState next = local_action(net, pending, TotalState{zeros(net.letter_count()), result.final_state});
    pending = std::move(next.pending);
    result.final_state = std::move(next.joint);
    ++result.rounds;
  }
  return result;
}

WordResult execute_word(const NetworkSpec& net, const std::vector<LetterId>& word, TotalState state) {
  WordResult r{std::move(state), true};
  for (LetterId a : word) {
    if (a >= net.letter_count()) fail(ErrorKind::structural, "letter out of range");
    if (r.state.pending[a] < 1) r.legal = false;
    r.state = process_letter(net, std::move(r.state), a, false);
  }
  return r;
}

JointState apply_counts(const NetworkSpec& net, const JointState& q, const CountVector& k) {
  TotalState s = local_action(net, k, TotalState{zeros(net.letter_count()), q});
  return s.joint;
}

}  // namespace abnet
