#pragma once

#include <cstdint>
#include <optional>

#include "abnet/engine.hpp"
#include "abnet/spectra.hpp"

namespace abnet {

enum class BurningMethod { procedure, sandpilization };
const char* to_string(BurningMethod m);

/// y is the burning script, k = D y the burning odometer and beta = L y the
/// burning element.
struct BurningCertificate {
  CountVector y;
  CountVector k;
  CountVector beta;
  BurningMethod via = BurningMethod::procedure;
  bool refined = false;  // lower bound 1_C instead of 1
};

inline constexpr std::uint64_t kDefaultBurningSteps = 10'000'000;

/// Pointwise smallest y >= lower with L y >= 0: start at `lower` and
/// repeatedly increment the smallest-index a with (L y)_a < 0. Throws
/// ErrorKind::budget_exhausted after `max_steps` increments.
CountVector burning_script(const IntMatrix& laplacian, const CountVector& lower,
                           std::uint64_t max_steps = kDefaultBurningSteps);
/// Same with lower = 1.
CountVector burning_script(const IntMatrix& laplacian, std::uint64_t max_steps = kDefaultBurningSteps);

struct SignedStabilization {
  CountVector chips;
  CountVector topplings;
};

/// Stabilization in the sandpilization with negative chip counts allowed:
/// while some chips_a >= r_a, topple a (chips -= column a of L). Throws
/// ErrorKind::budget_exhausted after `max_topplings` topplings.
SignedStabilization stabilize_signed(const IntMatrix& laplacian, const CountVector& reset, CountVector chips,
                                     std::uint64_t max_topplings = kDefaultBurningSteps);

/// Burning certificate by Procedure-style untoppling or by stabilizing
/// r - 1 - L u in the sandpilization, where u = 1 (or 1_C when
/// `refine_to_cycles`). Both methods are run and must agree
/// (ErrorKind::invariant_breach otherwise); `method` selects the label.
BurningCertificate burning_element(const ProductionData& pd, BurningMethod method = BurningMethod::procedure,
                                   bool refine_to_cycles = false);

/// Checks the defining constraints of a certificate against pd; throws
/// ErrorKind::invalid_argument if one fails.
void check_certificate(const ProductionData& pd, const BurningCertificate& cert);

struct RecurrenceVerdict {
  bool recurrent = false;
  CountVector odometer;  // [beta.q]
};

/// q is recurrent iff beta stabilizes from q back to q; the odometer then
/// equals k. For refined certificates q must also be locally recurrent.
RecurrenceVerdict is_recurrent(const NetworkSpec& net, const ProductionData& pd, const JointState& q,
                               const BurningCertificate& cert, std::optional<std::uint64_t> budget = std::nullopt);

}  // namespace abnet
