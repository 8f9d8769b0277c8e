#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "abnet/engine.hpp"
#include "abnet/lattice.hpp"

namespace abnet {

/// Coarse algebraic data of a network.
struct ProductionData {
  std::vector<LocalData> local;  // per vertex
  Lattice kernel;                // K, the product of the local kernels
  CountVector reset;             // r, the diagonal of D
  RationalMatrix production;     // P
  IntMatrix laplacian;           // L = (I - P) D
  /// successors[a] lists every b with P_ba > 0 (edge a -> b of the production graph).
  std::vector<std::vector<LetterId>> successors;

  std::size_t letter_count() const noexcept { return reset.size(); }
  IntMatrix reset_matrix() const;  // D
};

Lattice total_kernel(const NetworkSpec& net, std::uint64_t kernel_budget = kDefaultKernelBudget);

/// Column a is the emission of r_a letters a processed from a locally
/// recurrent state, divided by r_a. The column is recomputed at every locally
/// recurrent state of the owner and must not depend on it
/// (ErrorKind::invariant_breach otherwise).
RationalMatrix production_matrix(const NetworkSpec& net, const std::vector<LocalData>& local);
RationalMatrix production_matrix(const NetworkSpec& net);

/// L = (I - P) D; throws ErrorKind::invariant_breach on a non-integer entry.
IntMatrix laplacian(const RationalMatrix& production, const CountVector& reset);

ProductionData production_data(const NetworkSpec& net, std::uint64_t kernel_budget = kDefaultKernelBudget);

struct HaltingCertificate {
  bool halts = true;
  std::vector<Int> minors;  // leading principal minors, k = 1..n
  /// 1-based size of the first nonpositive leading minor.
  std::optional<std::size_t> witness;
};

/// All leading principal minors positive. For matrices with nonpositive
/// off-diagonal entries this is equivalent to all principal minors positive.
/// A positive off-diagonal entry throws ErrorKind::invalid_argument.
HaltingCertificate halting_check(const IntMatrix& laplacian);

/// Letters lying on a directed cycle of the production graph (self-loops count).
std::vector<bool> cycle_letters(const ProductionData& pd);
bool production_graph_acyclic(const ProductionData& pd);

/// Unary toppling network on the letters: vertex a has threshold r_a and on
/// wraparound emits r_a P_ba letters b. It has the same L and D.
NetworkSpec sandpilize(const ProductionData& pd);

/// For x in K (any sign), P x computed by simulation: x is shifted into the
/// nonnegative orthant by adding multiples of r_a 1_a, processed by the local
/// action from a locally recurrent state, and the shift's known emission
/// subtracted. Used to check that P is linear on K.
CountVector simulated_emission(const NetworkSpec& net, const ProductionData& pd, const CountVector& x);

}  // namespace abnet
