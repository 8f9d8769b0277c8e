#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "abnet/engine.hpp"

namespace abnet {

/// Directed multigraph used by the sandpile, rotor and toppling builders.
/// Vertex v owns letter v in the built network.
struct DigraphSpec {
  std::vector<std::string> names;
  std::vector<std::pair<std::size_t, std::size_t>> edges;  // (from, to), repeats allowed
  std::optional<std::size_t> sink;
  /// Per-vertex toppling thresholds (toppling networks only).
  std::vector<std::size_t> thresholds;
  /// Per-vertex rotor orderings as indices into `edges`; an empty entry means
  /// edge-list order.
  std::vector<std::vector<std::size_t>> rotor_order;

  std::size_t vertex_count() const noexcept { return names.size(); }
  /// Indices into `edges` of the out-edges of v, in edge-list order.
  std::vector<std::size_t> out_edges(std::size_t v) const;
};

/// Throws ErrorKind::validation unless every vertex has a directed path to the sink.
void check_sink_reachable(const DigraphSpec& g);

/// Sand(G, s): threshold d_v, one letter along every out-edge on wraparound.
NetworkSpec build_sandpile(const DigraphSpec& g);
/// Rotor(G, s): the transition q -> q+1 sends one letter along the (q+1)-th
/// edge of the vertex's rotor order.
NetworkSpec build_rotor(const DigraphSpec& g);
/// Toppling network with the given thresholds (sink optional).
NetworkSpec build_toppling(const DigraphSpec& g, const std::vector<std::size_t>& thresholds);

/// Two-vertex non-rectangular network: vertex i with letters a, b acting as
/// the same swap on two states, feeding the sink j (letter c).
NetworkSpec nonrectangular_example();

}  // namespace abnet
