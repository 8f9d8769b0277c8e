#pragma once

// Small hand-built networks, assembled directly from tables so the tests do
// not depend on the zoo builders, plus a few graphs for the zoo tests.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abnet/engine.hpp"

namespace fixtures {

using namespace abnet;

/// Chip counter with `threshold` states: every threshold-th letter emits one
/// letter to each target.
inline ProcessorSpec counter(std::size_t threshold, LetterId letter, std::size_t alphabet,
                             const std::vector<LetterId>& targets) {
  ProcessorSpec p;
  p.state_count = threshold;
  p.letters = {letter};
  p.alphabet_size = alphabet;
  p.transition.assign(1, std::vector<StateId>(threshold));
  p.output.assign(1, std::vector<CountVector>(threshold, zeros(alphabet)));
  for (StateId q = 0; q < threshold; ++q) p.transition[0][q] = static_cast<StateId>((q + 1) % threshold);
  for (LetterId t : targets) p.output[0][threshold - 1][t] += 1;
  return p;
}

inline ProcessorSpec sink(LetterId letter, std::size_t alphabet) { return counter(1, letter, alphabet, {}); }

/// Two vertices feeding each other and a sink; critical group Z/3.
inline NetworkSpec triangle() {
  return NetworkSpec({counter(2, 0, 3, {1, 2}), counter(2, 1, 3, {0, 2}), sink(2, 3)});
}

/// Vertex i (letters a=0, b=1, two states, both letters flip the state) feeds
/// the sink j (letter c=2). Outputs to c: (a,0)->1, (a,1)->2, (b,0)->0, (b,1)->1.
inline NetworkSpec nonrectangular() {
  ProcessorSpec i;
  i.state_count = 2;
  i.letters = {0, 1};
  i.alphabet_size = 3;
  i.transition = {{1, 0}, {1, 0}};
  i.output = {{{0, 0, 1}, {0, 0, 2}}, {{0, 0, 0}, {0, 0, 1}}};
  return NetworkSpec({i, sink(2, 3)});
}

/// One vertex with a transient state: t(0)=1, t(1)=2, t(2)=1.
inline ProcessorSpec transient() {
  ProcessorSpec p;
  p.state_count = 3;
  p.letters = {0};
  p.alphabet_size = 1;
  p.transition = {{1, 2, 1}};
  p.output = {{{0}, {0}, {0}}};
  return p;
}

/// Directed cycle 0 -> 1 -> ... -> n-1 -> 0 of counters with threshold 2,
/// each also feeding the sink (letter n).
inline NetworkSpec cycle_with_sink(std::size_t n) {
  std::vector<ProcessorSpec> v;
  for (std::size_t k = 0; k < n; ++k) v.push_back(counter(2, k, n + 1, {(k + 1) % n, n}));
  v.push_back(sink(n, n + 1));
  return NetworkSpec(std::move(v));
}

/// Two counters that feed each other without any sink: never halts.
inline NetworkSpec closed_pair() { return NetworkSpec({counter(1, 0, 2, {1}), counter(1, 1, 2, {0})}); }

}  // namespace fixtures

#include "abnet/zoo.hpp"

namespace fixtures {

inline DigraphSpec graph(std::vector<std::string> names, std::vector<std::pair<std::size_t, std::size_t>> edges,
                         std::optional<std::size_t> sink) {
  DigraphSpec g;
  g.names = std::move(names);
  g.edges = std::move(edges);
  g.sink = sink;
  return g;
}

/// u <-> v, both also pointing at the sink s.
inline DigraphSpec triangle_graph() { return graph({"u", "v", "s"}, {{0, 1}, {0, 2}, {1, 0}, {1, 2}}, 2); }

/// Undirected cycle on n vertices (each edge both ways); vertex n-1 is the sink.
inline DigraphSpec bidirected_cycle(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back("c" + std::to_string(k));
    edges.push_back({k, (k + 1) % n});
    edges.push_back({(k + 1) % n, k});
  }
  return graph(names, edges, n - 1);
}

/// Complete graph on n vertices with vertex n-1 as the sink.
inline DigraphSpec complete_graph(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t u = 0; u < n; ++u) {
    names.push_back("k" + std::to_string(u));
    for (std::size_t v = 0; v < n; ++v)
      if (u != v) edges.push_back({u, v});
  }
  return graph(names, edges, n - 1);
}

/// Directed path 0 -> 1 -> ... -> n-1 with the sink at the end.
inline DigraphSpec path_graph(std::size_t n) {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t k = 0; k < n; ++k) {
    names.push_back("p" + std::to_string(k));
    if (k + 1 < n) edges.push_back({k, k + 1});
  }
  return graph(names, edges, n - 1);
}

}  // namespace fixtures
