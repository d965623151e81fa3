#include "chromhopf/chromatic.hpp"

#include <map>
#include <stdexcept>

#include "chromhopf/canonical.hpp"
#include "chromhopf/orientation.hpp"

namespace chromhopf {

namespace {

bool is_independent(const Graph& g, VertexSet block) {
  for (VertexSet b = block; b; b &= b - 1) {
    if (g.neighbors(lowest(b)) & block) {
      return false;
    }
  }
  return true;
}

class DeletionContraction {
 public:
  Polynomial of_graph(const Graph& g) {
    Polynomial out = Polynomial::constant(Rational(1));
    for (VertexSet c : connected_components(g)) {
      out *= of_connected(restrict(g, c));
    }
    return out;
  }

 private:
  const Polynomial& of_connected(const Graph& g) {
    CanonicalKey key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    Polynomial p;
    if (g.order() == 1) {
      p = Polynomial::x();
    } else {
      const Edge e = g.edges().front();
      p = of_graph(delete_edge(g, e)) - of_graph(contract_edge(g, e));
    }
    return memo_.emplace(std::move(key), std::move(p)).first->second;
  }

  std::map<CanonicalKey, Polynomial> memo_;
};

void require_positive(int k) {
  if (k < 1) {
    throw std::domain_error("the number of colors must be at least 1");
  }
}

// Calls visit(colors) for every map V -> {0, ..., k-1}.
template <class F>
void for_each_coloring(int n, int k, F&& visit) {
  std::vector<int> colors(static_cast<std::size_t>(n), 0);
  while (true) {
    visit(colors);
    int i = 0;
    while (i < n && ++colors[static_cast<std::size_t>(i)] == k) {
      colors[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == n) {
      return;
    }
  }
}

}  // namespace

std::vector<Partition> independent_partitions(const Graph& g) {
  std::vector<Partition> out;
  for_each_set_partition(g.order(), [&](const Partition& p) {
    for (VertexSet b : p.blocks()) {
      if (!is_independent(g, b)) {
        return;
      }
    }
    out.push_back(p);
  });
  return out;
}

Polynomial pchr_partition(const Graph& g) {
  std::vector<Polynomial> falling(static_cast<std::size_t>(g.order()) + 1);
  std::vector<long> count(falling.size(), 0);
  for (const Partition& p : independent_partitions(g)) {
    ++count[static_cast<std::size_t>(p.block_count())];
  }
  Polynomial out;
  for (std::size_t k = 0; k < count.size(); ++k) {
    if (count[k] != 0) {
      out += falling_factorial(static_cast<int>(k)) * Rational(count[k]);
    }
  }
  return out;
}

Polynomial pchr_deletion_contraction(const Graph& g) { return DeletionContraction().of_graph(g); }

Polynomial pchr_character_formula(const Graph& g) {
  const Character chr = chromatic_character();
  Polynomial out;
  for_each_admissible_partition(g, [&](const Partition& p) {
    out += Polynomial::monomial(chr(extract(g, p)), p.block_count());
  });
  return out;
}

Polynomial chromatic_polynomial(const Graph& g, PolynomialEngine engine) {
  switch (engine) {
    case PolynomialEngine::Partition:
      return pchr_partition(g);
    case PolynomialEngine::Character:
      return pchr_character_formula(g);
    case PolynomialEngine::DeletionContraction:
      break;
  }
  return pchr_deletion_contraction(g);
}

std::uint64_t count_valid_colorings(const Graph& g, int k) {
  if (k < 0) {
    throw std::domain_error("negative number of colors");
  }
  const int n = g.order();
  if (k == 0) {
    return n == 0 ? 1 : 0;
  }
  const auto edges = g.edges();
  std::uint64_t total = 0;
  for_each_coloring(n, k, [&](const std::vector<int>& f) {
    for (const Edge& e : edges) {
      if (f[static_cast<std::size_t>(e.u)] == f[static_cast<std::size_t>(e.v)]) {
        return;
      }
    }
    ++total;
  });
  return total;
}

Polynomial phi_zero(const Graph& g) { return Polynomial::monomial(Rational(1), g.order()); }

GraphMorphism<Polynomial> phi_zero_morphism() { return GraphMorphism<Polynomial>(phi_zero); }

GraphMorphism<Polynomial> chromatic_morphism() {
  return GraphMorphism<Polynomial>([](const Graph& g) { return pchr_deletion_contraction(g); });
}

std::uint64_t stanley_families(const Graph& g, int k) {
  require_positive(k);
  const int n = g.order();
  std::map<VertexSet, std::uint64_t> orientations;
  auto acyclic_on = [&](VertexSet block) {
    auto it = orientations.find(block);
    if (it == orientations.end()) {
      it = orientations.emplace(block, count_acyclic_orientations(restrict(g, block))).first;
    }
    return it->second;
  };
  std::uint64_t total = 0;
  for_each_coloring(n, k, [&](const std::vector<int>& f) {
    std::vector<VertexSet> blocks(static_cast<std::size_t>(k), 0);
    for (int v = 0; v < n; ++v) {
      blocks[static_cast<std::size_t>(f[static_cast<std::size_t>(v)])] |= VertexSet{1} << v;
    }
    std::uint64_t product = 1;
    for (VertexSet b : blocks) {
      product *= acyclic_on(b);
    }
    total += product;
  });
  return total;
}

std::uint64_t stanley_pairs(const Graph& g, int k) {
  require_positive(k);
  const auto orientations = acyclic_orientations(g);
  std::uint64_t total = 0;
  for_each_coloring(g.order(), k, [&](const std::vector<int>& f) {
    for (const Orientation& o : orientations) {
      bool monotone = true;
      for (const auto& [tail, head] : o.arcs) {
        if (f[static_cast<std::size_t>(tail)] > f[static_cast<std::size_t>(head)]) {
          monotone = false;
          break;
        }
      }
      total += monotone ? 1 : 0;
    }
  });
  return total;
}

}  // namespace chromhopf
