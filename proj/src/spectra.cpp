#include "abnet/spectra.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>

namespace abnet {

namespace {

CountVector emission_from(const ProcessorSpec& spec, std::size_t local_letter, StateId state, const Int& count,
                          StateId& final_state) {
  CountVector e = zeros(spec.alphabet_size);
  final_state = advance(spec, local_letter, state, count, e);
  return e;
}

// Joint state with each vertex at its first locally recurrent state.
JointState base_state(const std::vector<LocalData>& local) {
  JointState q;
  for (const auto& d : local) q.push_back(d.recurrent_states.front());
  return q;
}

}  // namespace

IntMatrix ProductionData::reset_matrix() const {
  IntMatrix d(reset.size(), reset.size());
  for (std::size_t a = 0; a < reset.size(); ++a) d(a, a) = reset[a];
  return d;
}

Lattice total_kernel(const NetworkSpec& net, std::uint64_t kernel_budget) {
  std::vector<Lattice> blocks;
  for (const auto& p : net.vertices()) blocks.push_back(local_kernel(p, kernel_budget));
  // Letters are numbered contiguously per vertex only by convention; place
  // each block at its owner's letters.
  const std::size_t n = net.letter_count();
  std::vector<CountVector> gens;
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    const auto& p = net.vertex(v);
    for (const auto& b : blocks[v].basis_vectors()) {
      CountVector g = zeros(n);
      for (std::size_t i = 0; i < p.letter_count(); ++i) g[p.letters[i]] = b[i];
      gens.push_back(std::move(g));
    }
  }
  return Lattice::from_generators(n, gens);
}

RationalMatrix production_matrix(const NetworkSpec& net, const std::vector<LocalData>& local) {
  const std::size_t n = net.letter_count();
  RationalMatrix p(n, n);
  for (LetterId a = 0; a < n; ++a) {
    const VertexId v = net.owner(a);
    const auto& spec = net.vertex(v);
    const std::size_t i = net.local_index(a);
    const Int& r = local[v].reset[i];
    std::optional<CountVector> reference;
    for (StateId q : local[v].recurrent_states) {
      StateId back = 0;
      CountVector e = emission_from(spec, i, q, r, back);
      if (back != q)
        fail(ErrorKind::invariant_breach, "r_a letters do not return a locally recurrent state to itself");
      if (!reference) {
        reference = std::move(e);
      } else if (e != *reference) {
        fail(ErrorKind::invariant_breach, "production column of letter " + std::to_string(a) +
                                              " depends on the locally recurrent state");
      }
    }
    for (LetterId b = 0; b < n; ++b) p(b, a) = Rational((*reference)[b], r);
  }
  return p;
}

RationalMatrix production_matrix(const NetworkSpec& net) {
  std::vector<LocalData> local;
  for (const auto& p : net.vertices()) local.push_back(analyze_processor(p));
  return production_matrix(net, local);
}

IntMatrix laplacian(const RationalMatrix& production, const CountVector& reset) {
  const std::size_t n = reset.size();
  IntMatrix l(n, n);
  for (std::size_t b = 0; b < n; ++b)
    for (std::size_t a = 0; a < n; ++a) {
      Rational entry = (b == a ? Rational(1) : Rational(0)) - production(b, a);
      entry *= reset[a];
      if (denominator(entry) != 1) fail(ErrorKind::invariant_breach, "Laplacian entry is not an integer");
      l(b, a) = numerator(entry);
    }
  return l;
}

ProductionData production_data(const NetworkSpec& net, std::uint64_t kernel_budget) {
  ProductionData pd;
  const std::size_t n = net.letter_count();
  pd.reset = zeros(n);
  for (VertexId v = 0; v < net.vertex_count(); ++v) {
    pd.local.push_back(analyze_processor(net.vertex(v), kernel_budget));
    const auto& p = net.vertex(v);
    for (std::size_t i = 0; i < p.letter_count(); ++i) pd.reset[p.letters[i]] = pd.local.back().reset[i];
  }
  pd.kernel = total_kernel(net, kernel_budget);
  if (!pd.kernel.contains(Lattice::diagonal(pd.reset)))
    fail(ErrorKind::invariant_breach, "diagonal reset lattice is not contained in the total kernel");
  pd.production = production_matrix(net, pd.local);
  pd.laplacian = laplacian(pd.production, pd.reset);
  pd.successors.assign(n, {});
  for (LetterId a = 0; a < n; ++a)
    for (LetterId b = 0; b < n; ++b)
      if (pd.production(b, a) > 0) pd.successors[a].push_back(b);
  return pd;
}

HaltingCertificate halting_check(const IntMatrix& laplacian) {
  if (!laplacian.square()) fail(ErrorKind::structural, "Laplacian must be square");
  for (std::size_t i = 0; i < laplacian.rows(); ++i)
    for (std::size_t j = 0; j < laplacian.cols(); ++j)
      if (i != j && laplacian(i, j) > 0)
        fail(ErrorKind::invalid_argument, "malformed Laplacian: positive off-diagonal entry at (" +
                                              std::to_string(i) + ", " + std::to_string(j) + ")");
  HaltingCertificate cert;
  cert.minors = leading_principal_minors(laplacian);
  for (std::size_t k = 0; k < cert.minors.size(); ++k)
    if (cert.minors[k] <= 0) {
      cert.halts = false;
      cert.witness = k + 1;
      break;
    }
  return cert;
}

std::vector<bool> cycle_letters(const ProductionData& pd) {
  // Tarjan's strongly connected components; a letter is on a cycle iff its
  // component has more than one letter or it has a self-loop.
  const std::size_t n = pd.letter_count();
  std::vector<std::size_t> index(n, SIZE_MAX), low(n, 0), component(n, SIZE_MAX), size_of;
  std::vector<bool> on_stack(n, false);
  std::vector<std::size_t> stack;
  std::size_t counter = 0;
  std::function<void(std::size_t)> visit = [&](std::size_t a) {
    index[a] = low[a] = counter++;
    stack.push_back(a);
    on_stack[a] = true;
    for (std::size_t b : pd.successors[a]) {
      if (index[b] == SIZE_MAX) {
        visit(b);
        low[a] = std::min(low[a], low[b]);
      } else if (on_stack[b]) {
        low[a] = std::min(low[a], index[b]);
      }
    }
    if (low[a] == index[a]) {
      const std::size_t c = size_of.size();
      size_of.push_back(0);
      std::size_t b;
      do {
        b = stack.back();
        stack.pop_back();
        on_stack[b] = false;
        component[b] = c;
        ++size_of[c];
      } while (b != a);
    }
  };
  for (std::size_t a = 0; a < n; ++a)
    if (index[a] == SIZE_MAX) visit(a);
  std::vector<bool> on_cycle(n, false);
  for (std::size_t a = 0; a < n; ++a) {
    on_cycle[a] = size_of[component[a]] > 1;
    for (std::size_t b : pd.successors[a])
      if (b == a) on_cycle[a] = true;
  }
  return on_cycle;
}

bool production_graph_acyclic(const ProductionData& pd) {
  for (bool c : cycle_letters(pd))
    if (c) return false;
  return true;
}

NetworkSpec sandpilize(const ProductionData& pd) {
  const std::size_t n = pd.letter_count();
  std::vector<ProcessorSpec> vertices;
  for (LetterId a = 0; a < n; ++a) {
    const std::size_t threshold = pd.reset[a].convert_to<std::size_t>();
    ProcessorSpec p;
    p.state_count = threshold;
    p.letters = {a};
    p.alphabet_size = n;
    p.transition.assign(1, std::vector<StateId>(threshold));
    p.output.assign(1, std::vector<CountVector>(threshold, zeros(n)));
    for (std::size_t q = 0; q < threshold; ++q) p.transition[0][q] = static_cast<StateId>((q + 1) % threshold);
    for (LetterId b = 0; b < n; ++b) {
      // r_a P_ba = r_a [a == b] - L_ba
      p.output[0][threshold - 1][b] = (a == b ? pd.reset[a] : Int(0)) - pd.laplacian(b, a);
    }
    vertices.push_back(std::move(p));
  }
  return NetworkSpec(std::move(vertices));
}

CountVector simulated_emission(const NetworkSpec& net, const ProductionData& pd, const CountVector& x) {
  if (!pd.kernel.contains(x)) fail(ErrorKind::not_contained, "vector is not in the total kernel");
  const std::size_t n = net.letter_count();
  CountVector shift = zeros(n);
  CountVector shifted = x;
  for (LetterId a = 0; a < n; ++a)
    if (x[a] < 0) {
      shift[a] = (-x[a] + pd.reset[a] - 1) / pd.reset[a];
      shifted[a] += shift[a] * pd.reset[a];
    }
  const JointState q = base_state(pd.local);
  TotalState s = local_action(net, shifted, TotalState{zeros(n), q});
  if (s.joint != q) fail(ErrorKind::invariant_breach, "kernel vector moved a locally recurrent state");
  // Emission of the shift is (P D) shift = (D - L) shift.
  CountVector shift_emission = zeros(n);
  for (LetterId b = 0; b < n; ++b)
    for (LetterId a = 0; a < n; ++a)
      shift_emission[b] += ((a == b ? pd.reset[a] : Int(0)) - pd.laplacian(b, a)) * shift[a];
  return s.pending - shift_emission;
}

}  // namespace abnet
