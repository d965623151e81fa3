#include "chromhopf/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace chromhopf {

namespace {

void require_admissible(const Graph& g, const Partition& p) {
  if (p.ground_size() != g.order() || !is_admissible(g, p)) {
    throw std::domain_error("partition is not admissible for the graph");
  }
}

// Vertices linked through blocks of p or q end up with the same root.
Partition closure(int n, const Partition& p, const Partition& q) {
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) {
      v = parent[static_cast<std::size_t>(v)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
    }
    return v;
  };
  for (const Partition* r : {&p, &q}) {
    for (VertexSet b : r->blocks()) {
      const int first = find(lowest(b));
      for (VertexSet rest = b & (b - 1); rest; rest &= rest - 1) {
        parent[static_cast<std::size_t>(find(lowest(rest)))] = first;
      }
    }
  }
  std::vector<int> labels(static_cast<std::size_t>(n));
  for (int v = 0; v < n; ++v) {
    labels[static_cast<std::size_t>(v)] = find(v);
  }
  return Partition::from_labels(labels);
}

}  // namespace

AdmissibleLattice::AdmissibleLattice(const Graph& g) : graph_(g) {
  elements_ = admissible_partitions(g);
  std::sort(elements_.begin(), elements_.end(), [](const Partition& a, const Partition& b) {
    if (a.block_count() != b.block_count()) {
      return a.block_count() > b.block_count();
    }
    return a < b;
  });
  const std::size_t m = elements_.size();
  order_.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      order_[a * m + b] = elements_[a].refines(elements_[b]) ? 1 : 0;
    }
  }
  bottom_ = index_of(Partition::singletons(g.order()));
  top_ = index_of(Partition::from_blocks(g.order(), connected_components(g)));
}

std::size_t AdmissibleLattice::index_of(const Partition& p) const {
  const auto it = std::find(elements_.begin(), elements_.end(), p);
  if (it == elements_.end()) {
    throw std::domain_error("partition is not an element of the lattice");
  }
  return static_cast<std::size_t>(it - elements_.begin());
}

int AdmissibleLattice::rank(std::size_t i) const {
  return graph_.order() - elements_[i].block_count();
}

std::size_t AdmissibleLattice::meet(std::size_t a, std::size_t b) const {
  return index_of(chromhopf::meet(graph_, elements_[a], elements_[b]));
}

std::size_t AdmissibleLattice::join(std::size_t a, std::size_t b) const {
  return index_of(chromhopf::join(graph_, elements_[a], elements_[b]));
}

Rational AdmissibleLattice::mobius(std::size_t a, std::size_t b) const {
  if (!leq(a, b)) {
    throw std::domain_error("mobius needs a <= b");
  }
  // Elements are sorted by rank, so one forward sweep over [a, b] suffices.
  const std::size_t m = size();
  std::vector<Rational> mu(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (!leq(a, r) || !leq(r, b)) {
      continue;
    }
    if (r == a) {
      mu[r] = Rational(1);
      continue;
    }
    Rational sum(0);
    for (std::size_t s = 0; s < m; ++s) {
      if (s != r && leq(a, s) && leq(s, r)) {
        sum += mu[s];
      }
    }
    mu[r] = -sum;
  }
  return mu[b];
}

std::vector<std::pair<std::size_t, std::size_t>> AdmissibleLattice::covers() const {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const std::size_t m = size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (a == b || !leq(a, b)) {
        continue;
      }
      bool covered = true;
      for (std::size_t c = 0; c < m && covered; ++c) {
        covered = c == a || c == b || !(leq(a, c) && leq(c, b));
      }
      if (covered) {
        out.emplace_back(a, b);
      }
    }
  }
  return out;
}

Partition meet(const Graph& g, const Partition& p, const Partition& q) {
  require_admissible(g, p);
  require_admissible(g, q);
  std::vector<VertexSet> blocks;
  for (VertexSet b : p.blocks()) {
    for (VertexSet c : q.blocks()) {
      for (VertexSet rest = b & c; rest;) {
        const VertexSet part = component_of(g, lowest(rest), rest);
        blocks.push_back(part);
        rest &= ~part;
      }
    }
  }
  return Partition::from_blocks(g.order(), std::move(blocks));
}

Partition join(const Graph& g, const Partition& p, const Partition& q) {
  require_admissible(g, p);
  require_admissible(g, q);
  return closure(g.order(), p, q);
}

Graph interval_quotient(const Graph& g, const Partition& p, const Partition& q) {
  if (p.ground_size() != g.order() || !p.refines(q)) {
    throw std::domain_error("interval_quotient needs p <= q");
  }
  return contract(extract(g, q), p);
}

std::vector<std::size_t> zeta(const Graph& g, const Partition& p) {
  std::vector<std::size_t> out;
  const auto edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (p.block_of(edges[i].u) == p.block_of(edges[i].v)) {
      out.push_back(i);
    }
  }
  return out;
}

bool zeta_is_bijective(const Graph& g) {
  const std::size_t edges = g.edge_count();
  if (edges >= 63) {
    return false;
  }
  return admissible_partitions(g).size() == (std::size_t{1} << edges);
}

bool interval_isomorphic(const AdmissibleLattice& lattice, std::size_t a, std::size_t b,
                         const AdmissibleLattice& other) {
  std::vector<std::size_t> left;
  for (std::size_t r = 0; r < lattice.size(); ++r) {
    if (lattice.leq(a, r) && lattice.leq(r, b)) {
      left.push_back(r);
    }
  }
  if (left.size() != other.size()) {
    return false;
  }
  std::vector<std::size_t> image(other.size());
  std::iota(image.begin(), image.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < left.size() && ok; ++i) {
      for (std::size_t j = 0; j < left.size() && ok; ++j) {
        ok = lattice.leq(left[i], left[j]) == other.leq(image[i], image[j]);
      }
    }
    if (ok) {
      return true;
    }
  } while (std::next_permutation(image.begin(), image.end()));
  return false;
}

}  // namespace chromhopf
