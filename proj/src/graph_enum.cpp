#include "chromhopf/graph_enum.hpp"

#include <map>
#include <stdexcept>

#include "chromhopf/canonical.hpp"

namespace chromhopf {

std::vector<Graph> labeled_graphs(int n) {
  if (n < 0 || n > 7) {
    throw std::domain_error("labeled graph enumeration is limited to n <= 7");
  }
  std::vector<Edge> slots;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      slots.push_back({u, v});
    }
  }
  std::vector<Graph> out;
  const std::uint64_t total = std::uint64_t{1} << slots.size();
  out.reserve(total);
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    Graph g(n);
    for (std::size_t i = 0; i < slots.size(); ++i) {
      if ((mask >> i) & 1u) {
        g.add_edge(slots[i].u, slots[i].v);
      }
    }
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> graph_isoclasses(int n) {
  std::map<Monomial, Graph> classes;
  for (Graph& g : labeled_graphs(n)) {
    Monomial key = monomial_key(g);
    if (!classes.contains(key)) {
      Graph rep = key.graph();
      classes.emplace(std::move(key), std::move(rep));
    }
  }
  std::vector<Graph> out;
  out.reserve(classes.size());
  for (auto& [key, g] : classes) {
    out.push_back(std::move(g));
  }
  return out;
}

std::vector<Graph> connected_isoclasses(int n) {
  std::vector<Graph> out;
  for (Graph& g : graph_isoclasses(n)) {
    if (n > 0 && is_connected(g)) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

Graph random_graph(int n, double edge_probability, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(edge_probability);
  Graph g(n);
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) {
        g.add_edge(u, v);
      }
    }
  }
  return g;
}

}  // namespace chromhopf
