#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "abnet/lattice.hpp"
#include "abnet/monoid.hpp"
#include "abnet/types.hpp"

namespace abnet {

/// One vertex's finite automaton.
///
/// States are {0, ..., state_count-1}. The vertex owns the input letters in
/// `letters` (global letter ids); `transition[i][q]` and `output[i][q]` give the
/// next state and the emitted letter counts (over the whole alphabet) when the
/// i-th owned letter is processed in state q. Outputs are multisets: only the
/// number of letters of each kind matters, not their order.
struct ProcessorSpec {
  std::size_t state_count = 1;
  std::vector<LetterId> letters;
  std::size_t alphabet_size = 0;
  std::vector<std::vector<StateId>> transition;
  std::vector<std::vector<CountVector>> output;

  std::size_t letter_count() const noexcept { return letters.size(); }
  /// The map t_a for the i-th owned letter.
  const Transformation& map(std::size_t local_letter) const { return transition.at(local_letter); }
};

/// Throws ErrorKind::structural on out-of-range indices or inconsistent sizes.
void check_structure(const ProcessorSpec& spec);

struct AxiomViolation {
  enum class Kind { commutation, output_exchange, negative_output };
  Kind kind;
  std::size_t first_letter;   // local letter index
  std::size_t second_letter;  // local letter index (== first for negative_output)
  StateId state;

  std::string describe() const;
  friend bool operator==(const AxiomViolation&, const AxiomViolation&) = default;
};

/// Checks pairwise commutation t_a t_b = t_b t_a, the two-letter output exchange
/// identity out(a,q) + out(b,t_a q) = out(b,q) + out(a,t_b q), and nonnegative
/// outputs, for every (a, b, q). Empty result means the processor is abelian.
/// Structural problems throw instead of being reported.
std::vector<AxiomViolation> validate_abelian(const ProcessorSpec& spec);

/// True iff the undirected graph q -- t_a(q) is connected, i.e. mutual
/// accessibility has a single class.
bool is_irreducible(const ProcessorSpec& spec);

/// Transition monoid generated by the maps t_a, with identity.
class LocalMonoid {
 public:
  explicit LocalMonoid(const ProcessorSpec& spec, std::size_t size_cap = 1'000'000);

  std::size_t size() const noexcept { return monoid_.size(); }
  const Transformation& element(std::size_t i) const { return monoid_.element(i); }
  const std::vector<Transformation>& elements() const noexcept { return monoid_.elements(); }
  std::size_t identity() const noexcept { return 0; }
  std::size_t generator_of(std::size_t local_letter) const { return monoid_.generator(local_letter); }
  std::size_t product(std::size_t f, std::size_t g) const { return monoid_.product(f, g); }
  std::optional<std::size_t> find(const Transformation& t) const { return monoid_.find(t); }
  /// Full multiplication table, row-major (size() x size()).
  std::vector<std::size_t> product_table() const;
  const TransformationMonoid& underlying() const noexcept { return monoid_; }

 private:
  TransformationMonoid monoid_;
};

LocalMonoid local_monoid(const ProcessorSpec& spec);

/// Product of the idempotent powers of all elements: the unique idempotent e
/// with e in mM for every m.
Transformation minimal_idempotent(const LocalMonoid& m);

/// Image of the state set under the minimal idempotent (sorted).
std::vector<StateId> locally_recurrent_states(const ProcessorSpec& spec);

/// r_a = order of t_a acting on the locally recurrent states, per owned letter.
/// Throws ErrorKind::validation for reducible processors.
CountVector reset_numbers(const ProcessorSpec& spec);

inline constexpr std::uint64_t kDefaultKernelBudget = 1'000'000;

/// K_v = { x in Z^{A_v} : x acts trivially on the locally recurrent states }.
/// Enumerates the box prod [0, r_a); throws ErrorKind::budget_exhausted when the
/// box has more than `budget` points and ErrorKind::validation when the
/// processor is reducible.
Lattice local_kernel(const ProcessorSpec& spec, std::uint64_t budget = kDefaultKernelBudget);

/// Everything the network-level analysis needs from one processor.
struct LocalData {
  Transformation idempotent;
  std::vector<StateId> recurrent_states;
  CountVector reset;
  Lattice kernel;
  /// [K_v : D_v Z^{A_v}]
  Int local_index;
};

LocalData analyze_processor(const ProcessorSpec& spec, std::uint64_t budget = kDefaultKernelBudget);

/// True iff t(x) fixes `state`, where t(x) = prod t_a^{x_a} over owned letters.
bool fixes(const ProcessorSpec& spec, const CountVector& local_counts, StateId state);

}  // namespace abnet
