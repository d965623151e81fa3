#pragma once

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromhopf/partition.hpp"

namespace chromhopf {

/// Undirected edge {u, v} with u < v (0-based vertices).
struct Edge {
  int u = 0;
  int v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Simple graph on the indexed vertex set {0, ..., n-1}.
///
/// Vertices print 1-based in the text format "n: i-j, k-l". The empty graph
/// (n = 0) is the unit of both graph algebras. Ordering is structural, so
/// two Graph values compare equal iff they are the same indexed graph.
class Graph {
 public:
  Graph() = default;
  explicit Graph(int n);
  /// Throws std::domain_error on loops, duplicates, or out-of-range endpoints.
  static Graph from_edges(int n, const std::vector<Edge>& edges);

  int order() const { return n_; }
  std::size_t edge_count() const;
  VertexSet vertices() const { return full_set(n_); }
  VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool has_edge(int u, int v) const;
  /// Edges in lexicographic order.
  std::vector<Edge> edges() const;

  void add_edge(int u, int v);

  friend auto operator<=>(const Graph&, const Graph&) = default;

 private:
  int n_ = 0;
  std::vector<VertexSet> adj_;
};

/// Parses "n: i-j, k-l, ..." (1-based); "0:" is the empty graph. Throws
/// std::invalid_argument on syntax errors and std::domain_error on loops,
/// duplicate edges, or out-of-range vertices.
Graph parse_graph(std::string_view text);
std::string format_graph(const Graph& g);

Edge make_edge(int a, int b);

/// G restricted to `subset`, relabeled by the increasing bijection onto {0, ..., |subset|-1}.
Graph restrict(const Graph& g, VertexSet subset);
/// G/~: one vertex per block (blocks ordered by minimal element), loops and
/// multiple edges dropped.
Graph contract(const Graph& g, const Partition& p);
/// G|~: same vertices, only the edges inside blocks.
Graph extract(const Graph& g, const Partition& p);
/// Every block induces a connected subgraph.
bool is_admissible(const Graph& g, const Partition& p);
bool induces_connected(const Graph& g, VertexSet subset);

/// All admissible partitions, each once, in restricted-growth order.
std::vector<Partition> admissible_partitions(const Graph& g);

template <class F>
void for_each_admissible_partition(const Graph& g, F&& visit) {
  for_each_set_partition(g.order(), [&](const Partition& p) {
    if (is_admissible(g, p)) {
      visit(p);
    }
  });
}

Graph delete_edge(const Graph& g, Edge e);
Graph contract_edge(const Graph& g, Edge e);
bool is_bridge(const Graph& g, Edge e);

/// Components sorted by minimal vertex.
std::vector<VertexSet> connected_components(const Graph& g);
/// Component containing `start`, within `within`.
VertexSet component_of(const Graph& g, int start, VertexSet within);
int component_count(const Graph& g);
/// |G| - cc(G), the grading of the contraction coproduct.
int degree(const Graph& g);
int vertex_degree(const Graph& g, int v);

bool is_connected(const Graph& g);
bool is_edgeless(const Graph& g);
bool is_complete(const Graph& g);
/// Acyclic in the graph-theoretic sense (every edge a bridge).
bool is_forest(const Graph& g);

/// Indexed product GH: H shifted after G.
Graph disjoint_union(const Graph& g, const Graph& h);
/// Vertex relabeling: vertex v of g becomes perm[v].
Graph relabel(const Graph& g, const std::vector<int>& perm);
Graph complete_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

}  // namespace chromhopf
