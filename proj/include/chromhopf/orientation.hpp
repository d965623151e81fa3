#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "chromhopf/graph.hpp"

namespace chromhopf {

/// Direction for every edge of a graph: arcs[i] = (tail, head) for the i-th
/// edge in Graph::edges() order.
struct Orientation {
  std::vector<std::pair<int, int>> arcs;
};

bool is_acyclic(int vertex_count, const Orientation& o);

/// Visits every acyclic orientation exactly once.
template <class F>
void for_each_acyclic_orientation(const Graph& g, F&& visit) {
  const auto edges = g.edges();
  const std::uint64_t total = std::uint64_t{1} << edges.size();
  Orientation o;
  o.arcs.resize(edges.size());
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    for (std::size_t i = 0; i < edges.size(); ++i) {
      const bool flip = (mask >> i) & 1u;
      o.arcs[i] = flip ? std::pair{edges[i].v, edges[i].u} : std::pair{edges[i].u, edges[i].v};
    }
    if (is_acyclic(g.order(), o)) {
      visit(o);
    }
  }
}

std::vector<Orientation> acyclic_orientations(const Graph& g);
std::uint64_t count_acyclic_orientations(const Graph& g);

}  // namespace chromhopf
