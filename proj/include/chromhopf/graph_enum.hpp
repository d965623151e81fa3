#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "chromhopf/graph.hpp"

namespace chromhopf {

/// One representative per isomorphism class of graphs on n vertices, ordered
/// by monomial key. Enumerates all labeled graphs, so keep n <= 6.
std::vector<Graph> graph_isoclasses(int n);
std::vector<Graph> connected_isoclasses(int n);

/// Every indexed graph on n vertices (2^(n(n-1)/2) of them).
std::vector<Graph> labeled_graphs(int n);

/// Erdős–Rényi G(n, p).
Graph random_graph(int n, double edge_probability, std::mt19937_64& rng);

}  // namespace chromhopf
