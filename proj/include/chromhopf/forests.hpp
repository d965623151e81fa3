#pragma once

#include <compare>
#include <vector>

#include "chromhopf/graph.hpp"

namespace chromhopf {

/// Laminar family of connected vertex subsets of a connected graph. It always
/// contains the full vertex set; every other member has at least two
/// vertices (singletons are implicit).
struct NestedForest {
  /// Sorted by decreasing size, then by bitmask.
  std::vector<VertexSet> members;

  friend auto operator<=>(const NestedForest&, const NestedForest&) = default;
};

/// All nested forests of a connected graph. Throws std::domain_error for a
/// disconnected or empty graph.
std::vector<NestedForest> nested_forests(const Graph& g);

/// Factors (G|_I)/~_I for each member I, where the classes of ~_I are the
/// maximal members strictly inside I, completed by singletons. Factors come
/// in member order; K1 factors are kept.
std::vector<Graph> forest_evaluate(const Graph& g, const NestedForest& forest);

}  // namespace chromhopf
