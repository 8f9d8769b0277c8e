#include "abnet/burning.hpp"

#include <algorithm>

namespace abnet {

namespace {

CountVector ones(std::size_t n) { return CountVector(n, Int(1)); }

CountVector lower_bound_for(const ProductionData& pd, bool refine_to_cycles) {
  if (!refine_to_cycles) return ones(pd.letter_count());
  const auto cyc = cycle_letters(pd);
  CountVector u = zeros(pd.letter_count());
  for (std::size_t a = 0; a < u.size(); ++a)
    if (cyc[a]) u[a] = 1;
  return u;
}

}  // namespace

const char* to_string(BurningMethod m) {
  return m == BurningMethod::procedure ? "procedure" : "sandpilization";
}

CountVector burning_script(const IntMatrix& laplacian, const CountVector& lower, std::uint64_t max_steps) {
  if (!laplacian.square() || lower.size() != laplacian.rows())
    fail(ErrorKind::structural, "burning script dimensions do not match");
  CountVector y = lower;
  CountVector ly = laplacian * y;
  for (std::uint64_t step = 0;; ++step) {
    auto it = std::find_if(ly.begin(), ly.end(), [](const Int& v) { return v < 0; });
    if (it == ly.end()) return y;
    if (step >= max_steps)
      fail(ErrorKind::budget_exhausted, "burning script did not converge; L is probably not halting");
    const std::size_t a = static_cast<std::size_t>(it - ly.begin());
    y[a] += 1;
    for (std::size_t b = 0; b < ly.size(); ++b) ly[b] += laplacian(b, a);
  }
}

CountVector burning_script(const IntMatrix& laplacian, std::uint64_t max_steps) {
  return burning_script(laplacian, ones(laplacian.rows()), max_steps);
}

SignedStabilization stabilize_signed(const IntMatrix& laplacian, const CountVector& reset, CountVector chips,
                                     std::uint64_t max_topplings) {
  const std::size_t n = reset.size();
  if (chips.size() != n || laplacian.rows() != n || laplacian.cols() != n)
    fail(ErrorKind::structural, "signed stabilization dimensions do not match");
  SignedStabilization s{std::move(chips), zeros(n)};
  Int total = 0;
  for (;;) {
    bool toppled = false;
    for (std::size_t a = 0; a < n; ++a) {
      if (s.chips[a] < reset[a]) continue;
      // Toppling a only adds chips at a through self-loops, so firing
      // floor(chips_a / r_a) times in one go is a legal sequence.
      const Int times = s.chips[a] / reset[a];
      total += times;
      if (total > max_topplings) fail(ErrorKind::budget_exhausted, "signed stabilization exceeded its budget");
      for (std::size_t b = 0; b < n; ++b) s.chips[b] -= times * laplacian(b, a);
      s.topplings[a] += times;
      toppled = true;
    }
    if (!toppled) return s;
  }
}

BurningCertificate burning_element(const ProductionData& pd, BurningMethod method, bool refine_to_cycles) {
  const std::size_t n = pd.letter_count();
  const CountVector u = lower_bound_for(pd, refine_to_cycles);
  const CountVector y = burning_script(pd.laplacian, u);
  const CountVector beta_procedure = pd.laplacian * y;

  const CountVector r_minus_1 = pd.reset - ones(n);
  const auto stab = stabilize_signed(pd.laplacian, pd.reset, r_minus_1 - pd.laplacian * u);
  const CountVector beta_sandpile = r_minus_1 - stab.chips;
  if (beta_procedure != beta_sandpile || stab.topplings + u != y)
    fail(ErrorKind::invariant_breach, "burning procedure and sandpilization disagree");

  BurningCertificate cert;
  cert.y = y;
  cert.k = zeros(n);
  for (std::size_t a = 0; a < n; ++a) cert.k[a] = pd.reset[a] * y[a];
  cert.beta = beta_procedure;
  cert.via = method;
  cert.refined = refine_to_cycles;
  check_certificate(pd, cert);
  return cert;
}

void check_certificate(const ProductionData& pd, const BurningCertificate& cert) {
  const std::size_t n = pd.letter_count();
  if (cert.y.size() != n || cert.k.size() != n || cert.beta.size() != n)
    fail(ErrorKind::invalid_argument, "certificate has the wrong length");
  if (!leq(lower_bound_for(pd, cert.refined), cert.y)) fail(ErrorKind::invalid_argument, "burning script below its bound");
  for (std::size_t a = 0; a < n; ++a)
    if (cert.k[a] != pd.reset[a] * cert.y[a]) fail(ErrorKind::invalid_argument, "k differs from D y");
  if (cert.beta != pd.laplacian * cert.y) fail(ErrorKind::invalid_argument, "beta differs from L y");
  if (!is_nonnegative(cert.beta)) fail(ErrorKind::invalid_argument, "burning element has a negative entry");
  if (!pd.kernel.contains(cert.k)) fail(ErrorKind::invalid_argument, "burning odometer is not in K");
}

RecurrenceVerdict is_recurrent(const NetworkSpec& net, const ProductionData& pd, const JointState& q,
                               const BurningCertificate& cert, std::optional<std::uint64_t> budget) {
  check_certificate(pd, cert);
  net.check_state(q);
  RecurrenceVerdict v;
  if (cert.refined) {
    // Letters off the cycles of the production graph are not burned, so local
    // recurrence has to be checked directly.
    for (VertexId w = 0; w < net.vertex_count(); ++w) {
      const auto& rec = pd.local[w].recurrent_states;
      if (!std::binary_search(rec.begin(), rec.end(), q[w])) {
        v.odometer = zeros(net.letter_count());
        return v;
      }
    }
  }
  const auto s = stabilize(net, cert.beta, q, budget);
  v.recurrent = s.final_state == q;
  v.odometer = s.odometer;
  if (v.recurrent && v.odometer != cert.k)
    fail(ErrorKind::invariant_breach, "recurrent state burned with an odometer different from k");
  return v;
}

}  // namespace abnet
