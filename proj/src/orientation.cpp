#include "chromhopf/orientation.hpp"

namespace chromhopf {

bool is_acyclic(int vertex_count, const Orientation& o) {
  // Kahn's algorithm: peel sources until nothing is left or a cycle blocks.
  std::vector<VertexSet> in(static_cast<std::size_t>(vertex_count), 0);
  for (const auto& [tail, head] : o.arcs) {
    in[static_cast<std::size_t>(head)] |= VertexSet{1} << tail;
  }
  VertexSet remaining = full_set(vertex_count);
  while (remaining) {
    VertexSet sources = 0;
    for (VertexSet r = remaining; r; r &= r - 1) {
      const int v = lowest(r);
      if ((in[static_cast<std::size_t>(v)] & remaining) == 0) {
        sources |= VertexSet{1} << v;
      }
    }
    if (sources == 0) {
      return false;
    }
    remaining &= ~sources;
  }
  return true;
}

std::vector<Orientation> acyclic_orientations(const Graph& g) {
  std::vector<Orientation> out;
  for_each_acyclic_orientation(g, [&](const Orientation& o) { out.push_back(o); });
  return out;
}

std::uint64_t count_acyclic_orientations(const Graph& g) {
  std::uint64_t count = 0;
  for_each_acyclic_orientation(g, [&](const Orientation&) { ++count; });
  return count;
}

}  // namespace chromhopf
