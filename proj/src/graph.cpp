#include "chromhopf/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace chromhopf {

namespace {

VertexSet bit(int v) { return VertexSet{1} << v; }

void check_vertex(const Graph& g, int v) {
  if (v < 0 || v >= g.order()) {
    throw std::domain_error("vertex out of range");
  }
}

void check_edge(const Graph& g, Edge e) {
  check_vertex(g, e.u);
  check_vertex(g, e.v);
  if (!g.has_edge(e.u, e.v)) {
    throw std::domain_error("edge not in graph");
  }
}

void check_partition(const Graph& g, const Partition& p) {
  if (p.ground_size() != g.order()) {
    throw std::domain_error("partition does not match the vertex set");
  }
}

int parse_int(std::string_view s, std::string_view what) {
  int value = 0;
  const auto* first = s.data();
  const auto* last = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (s.empty() || ec != std::errc() || ptr != last) {
    throw std::invalid_argument("malformed " + std::string(what) + ": '" + std::string(s) + "'");
  }
  return value;
}

}  // namespace

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(std::max(n, 0)), 0) {
  if (n < 0 || n > kMaxVertices) {
    throw std::domain_error("graph order out of range");
  }
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (const Edge& e : edges) {
    g.add_edge(e.u, e.v);
  }
  return g;
}

std::size_t Graph::edge_count() const {
  std::size_t twice = 0;
  for (VertexSet a : adj_) {
    twice += static_cast<std::size_t>(popcount(a));
  }
  return twice / 2;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n_ || v >= n_) {
    return false;
  }
  return (adj_[static_cast<std::size_t>(u)] & bit(v)) != 0;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (int u = 0; u < n_; ++u) {
    for (VertexSet rest = adj_[static_cast<std::size_t>(u)] & ~full_set(u + 1); rest;
         rest &= rest - 1) {
      out.push_back({u, lowest(rest)});
    }
  }
  return out;
}

void Graph::add_edge(int u, int v) {
  check_vertex(*this, u);
  check_vertex(*this, v);
  if (u == v) {
    throw std::domain_error("loops are not allowed");
  }
  if (has_edge(u, v)) {
    throw std::domain_error("duplicate edge");
  }
  adj_[static_cast<std::size_t>(u)] |= bit(v);
  adj_[static_cast<std::size_t>(v)] |= bit(u);
}

Edge make_edge(int a, int b) { return a < b ? Edge{a, b} : Edge{b, a}; }

Graph parse_graph(std::string_view text) {
  std::string compact;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) {
      compact.push_back(c);
    }
  }
  const auto colon = compact.find(':');
  if (colon == std::string::npos) {
    throw std::invalid_argument("graph text must look like 'n: i-j, k-l'");
  }
  const int n = parse_int(std::string_view(compact).substr(0, colon), "vertex count");
  if (n < 0 || n > kMaxVertices) {
    throw std::domain_error("vertex count out of range");
  }
  Graph g(n);
  std::string_view rest = std::string_view(compact).substr(colon + 1);
  if (rest.empty()) {
    return g;
  }
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto dash = item.find('-');
    if (dash == std::string_view::npos) {
      throw std::invalid_argument("malformed edge: '" + std::string(item) + "'");
    }
    const int a = parse_int(item.substr(0, dash), "edge endpoint");
    const int b = parse_int(item.substr(dash + 1), "edge endpoint");
    if (a < 1 || b < 1 || a > n || b > n) {
      throw std::domain_error("edge endpoint out of range: '" + std::string(item) + "'");
    }
    g.add_edge(a - 1, b - 1);
    if (comma == std::string_view::npos) {
      break;
    }
    rest = rest.substr(comma + 1);
  }
  return g;
}

std::string format_graph(const Graph& g) {
  std::string out = std::to_string(g.order()) + ":";
  bool first = true;
  for (const Edge& e : g.edges()) {
    out += first ? " " : ", ";
    first = false;
    out += std::to_string(e.u + 1) + "-" + std::to_string(e.v + 1);
  }
  return out;
}

Graph restrict(const Graph& g, VertexSet subset) {
  if ((subset & ~g.vertices()) != 0) {
    throw std::domain_error("restriction subset out of range");
  }
  Graph out(popcount(subset));
  int i = 0;
  for (VertexSet s = subset; s; s &= s - 1, ++i) {
    const int v = lowest(s);
    const VertexSet image = compress(g.neighbors(v) & subset, subset);
    for (VertexSet higher = image & ~full_set(i + 1); higher; higher &= higher - 1) {
      out.add_edge(i, lowest(higher));
    }
  }
  return out;
}

Graph contract(const Graph& g, const Partition& p) {
  check_partition(g, p);
  const auto& blocks = p.blocks();
  const auto k = blocks.size();
  Graph out(static_cast<int>(k));
  for (std::size_t i = 0; i < k; ++i) {
    VertexSet reach = 0;
    for (VertexSet b = blocks[i]; b; b &= b - 1) {
      reach |= g.neighbors(lowest(b));
    }
    for (std::size_t j = i + 1; j < k; ++j) {
      if (reach & blocks[j]) {
        out.add_edge(static_cast<int>(i), static_cast<int>(j));
      }
    }
  }
  return out;
}

Graph extract(const Graph& g, const Partition& p) {
  check_partition(g, p);
  Graph out(g.order());
  for (VertexSet block : p.blocks()) {
    for (VertexSet b = block; b; b &= b - 1) {
      const int u = lowest(b);
      for (VertexSet higher = g.neighbors(u) & block & ~full_set(u + 1); higher;
           higher &= higher - 1) {
        out.add_edge(u, lowest(higher));
      }
    }
  }
  return out;
}

VertexSet component_of(const Graph& g, int start, VertexSet within) {
  VertexSet seen = bit(start);
  VertexSet frontier = seen;
  while (frontier) {
    VertexSet next = 0;
    for (VertexSet f = frontier; f; f &= f - 1) {
      next |= g.neighbors(lowest(f));
    }
    next &= within & ~seen;
    seen |= next;
    frontier = next;
  }
  return seen;
}

bool induces_connected(const Graph& g, VertexSet subset) {
  if (subset == 0) {
    return true;
  }
  return component_of(g, lowest(subset), subset) == subset;
}

bool is_admissible(const Graph& g, const Partition& p) {
  check_partition(g, p);
  return std::all_of(p.blocks().begin(), p.blocks().end(),
                     [&](VertexSet b) { return induces_connected(g, b); });
}

std::vector<Partition> admissible_partitions(const Graph& g) {
  std::vector<Partition> out;
  for_each_admissible_partition(g, [&](const Partition& p) { out.push_back(p); });
  return out;
}

Graph delete_edge(const Graph& g, Edge e) {
  check_edge(g, e);
  Graph out(g.order());
  for (const Edge& f : g.edges()) {
    if (f != make_edge(e.u, e.v)) {
      out.add_edge(f.u, f.v);
    }
  }
  return out;
}

Graph contract_edge(const Graph& g, Edge e) {
  check_edge(g, e);
  std::vector<VertexSet> blocks{bit(e.u) | bit(e.v)};
  for (int v = 0; v < g.order(); ++v) {
    if (v != e.u && v != e.v) {
      blocks.push_back(bit(v));
    }
  }
  return contract(g, Partition::from_blocks(g.order(), std::move(blocks)));
}

bool is_bridge(const Graph& g, Edge e) {
  return component_count(delete_edge(g, e)) > component_count(g);
}

std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet remaining = g.vertices();
  while (remaining) {
    const VertexSet c = component_of(g, lowest(remaining), g.vertices());
    out.push_back(c);
    remaining &= ~c;
  }
  return out;
}

int component_count(const Graph& g) { return static_cast<int>(connected_components(g).size()); }

int degree(const Graph& g) { return g.order() - component_count(g); }

int vertex_degree(const Graph& g, int v) {
  check_vertex(g, v);
  return popcount(g.neighbors(v));
}

bool is_connected(const Graph& g) { return component_count(g) <= 1; }

bool is_edgeless(const Graph& g) { return g.edge_count() == 0; }

bool is_complete(const Graph& g) {
  const auto n = static_cast<std::size_t>(g.order());
  return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

bool is_forest(const Graph& g) {
  return g.edge_count() == static_cast<std::size_t>(g.order() - component_count(g));
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  Graph out(g.order() + h.order());
  for (const Edge& e : g.edges()) {
    out.add_edge(e.u, e.v);
  }
  for (const Edge& e : h.edges()) {
    out.add_edge(e.u + g.order(), e.v + g.order());
  }
  return out;
}

Graph relabel(const Graph& g, const std::vector<int>& perm) {
  if (perm.size() != static_cast<std::size_t>(g.order())) {
    throw std::domain_error("relabeling has the wrong size");
  }
  Graph out(g.order());
  for (const Edge& e : g.edges()) {
    out.add_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]);
  }
  return out;
}

Graph complete_graph(int n) {
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      g.add_edge(u, v);
    }
  }
  return g;
}

Graph path_graph(int n) {
  Graph g(n);
  for (int v = 0; v + 1 < n; ++v) {
    g.add_edge(v, v + 1);
  }
  return g;
}

Graph cycle_graph(int n) {
  if (n < 3) {
    throw std::domain_error("cycles need at least three vertices");
  }
  Graph g = path_graph(n);
  g.add_edge(0, n - 1);
  return g;
}

}  // namespace chromhopf
