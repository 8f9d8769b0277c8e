#include "abnet/zoo.hpp"

#include <algorithm>

namespace abnet {

namespace {

void check_graph(const DigraphSpec& g) {
  const std::size_t n = g.vertex_count();
  if (n == 0) fail(ErrorKind::validation, "graph has no vertices");
  for (const auto& [u, v] : g.edges)
    if (u >= n || v >= n) fail(ErrorKind::structural, "edge endpoint out of range");
  if (g.sink && *g.sink >= n) fail(ErrorKind::structural, "sink out of range");
}

ProcessorSpec sink_processor(std::size_t v, std::size_t n) {
  ProcessorSpec p;
  p.state_count = 1;
  p.letters = {v};
  p.alphabet_size = n;
  p.transition = {{0}};
  p.output = {{zeros(n)}};
  return p;
}

ProcessorSpec cyclic_processor(std::size_t v, std::size_t n, std::size_t states) {
  ProcessorSpec p;
  p.state_count = states;
  p.letters = {v};
  p.alphabet_size = n;
  p.transition.assign(1, std::vector<StateId>(states));
  p.output.assign(1, std::vector<CountVector>(states, zeros(n)));
  for (std::size_t q = 0; q < states; ++q) p.transition[0][q] = static_cast<StateId>((q + 1) % states);
  return p;
}

}  // namespace

std::vector<std::size_t> DigraphSpec::out_edges(std::size_t v) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < edges.size(); ++i)
    if (edges[i].first == v) out.push_back(i);
  return out;
}

void check_sink_reachable(const DigraphSpec& g) {
  check_graph(g);
  if (!g.sink) fail(ErrorKind::validation, "graph has no sink");
  // Backward search from the sink.
  std::vector<bool> reaches(g.vertex_count(), false);
  reaches[*g.sink] = true;
  for (bool changed = true; changed;) {
    changed = false;
    for (const auto& [u, v] : g.edges)
      if (reaches[v] && !reaches[u]) reaches[u] = changed = true;
  }
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (!reaches[v]) fail(ErrorKind::validation, "vertex " + g.names[v] + " has no path to the sink");
}

NetworkSpec build_sandpile(const DigraphSpec& g) {
  check_sink_reachable(g);
  const std::size_t n = g.vertex_count();
  std::vector<ProcessorSpec> vertices;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == *g.sink) {
      vertices.push_back(sink_processor(v, n));
      continue;
    }
    const auto out = g.out_edges(v);
    ProcessorSpec p = cyclic_processor(v, n, out.size());
    for (std::size_t e : out) p.output[0][out.size() - 1][g.edges[e].second] += 1;
    vertices.push_back(std::move(p));
  }
  return NetworkSpec(std::move(vertices));
}

NetworkSpec build_rotor(const DigraphSpec& g) {
  check_sink_reachable(g);
  const std::size_t n = g.vertex_count();
  std::vector<ProcessorSpec> vertices;
  for (std::size_t v = 0; v < n; ++v) {
    if (v == *g.sink) {
      vertices.push_back(sink_processor(v, n));
      continue;
    }
    const auto out = g.out_edges(v);
    std::vector<std::size_t> order = out;
    if (v < g.rotor_order.size() && !g.rotor_order[v].empty()) {
      order = g.rotor_order[v];
      auto sorted = order;
      std::sort(sorted.begin(), sorted.end());
      if (sorted != out) fail(ErrorKind::validation, "rotor order of " + g.names[v] + " is not a permutation of its out-edges");
    }
    ProcessorSpec p = cyclic_processor(v, n, out.size());
    for (std::size_t q = 0; q < order.size(); ++q) p.output[0][q][g.edges[order[q]].second] += 1;
    vertices.push_back(std::move(p));
  }
  return NetworkSpec(std::move(vertices));
}

NetworkSpec build_toppling(const DigraphSpec& g, const std::vector<std::size_t>& thresholds) {
  check_graph(g);
  const std::size_t n = g.vertex_count();
  if (thresholds.size() != n) fail(ErrorKind::validation, "one threshold per vertex is required");
  std::vector<ProcessorSpec> vertices;
  for (std::size_t v = 0; v < n; ++v) {
    if (g.sink && v == *g.sink) {
      vertices.push_back(sink_processor(v, n));
      continue;
    }
    if (thresholds[v] < 1) fail(ErrorKind::validation, "threshold of " + g.names[v] + " must be at least 1");
    ProcessorSpec p = cyclic_processor(v, n, thresholds[v]);
    for (std::size_t e : g.out_edges(v)) p.output[0][thresholds[v] - 1][g.edges[e].second] += 1;
    vertices.push_back(std::move(p));
  }
  return NetworkSpec(std::move(vertices));
}

NetworkSpec nonrectangular_example() {
  ProcessorSpec i;
  i.state_count = 2;
  i.letters = {0, 1};
  i.alphabet_size = 3;
  i.transition = {{1, 0}, {1, 0}};
  i.output = {{{0, 0, 1}, {0, 0, 2}}, {{0, 0, 0}, {0, 0, 1}}};
  return NetworkSpec({i, sink_processor(2, 3)});
}

}  // namespace abnet
