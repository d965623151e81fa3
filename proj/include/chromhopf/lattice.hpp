#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "chromhopf/graph.hpp"
#include "chromhopf/partition.hpp"
#include "chromhopf/rational.hpp"

namespace chromhopf {

/// The lattice R(G) of admissible partitions ordered by refinement,
/// materialized as an element list plus order matrix.
class AdmissibleLattice {
 public:
  explicit AdmissibleLattice(const Graph& g);

  const Graph& graph() const { return graph_; }
  std::size_t size() const { return elements_.size(); }
  const std::vector<Partition>& elements() const { return elements_; }
  const Partition& element(std::size_t i) const { return elements_[i]; }
  /// Throws std::domain_error if p is not in the lattice.
  std::size_t index_of(const Partition& p) const;

  bool leq(std::size_t a, std::size_t b) const { return order_[a * size() + b]; }
  /// |G| - cl(p).
  int rank(std::size_t i) const;
  std::size_t bottom() const { return bottom_; }
  std::size_t top() const { return top_; }

  std::size_t meet(std::size_t a, std::size_t b) const;
  std::size_t join(std::size_t a, std::size_t b) const;
  /// Möbius function; throws std::domain_error unless a <= b.
  Rational mobius(std::size_t a, std::size_t b) const;
  /// Hasse diagram edges (a, b) with a covered by b.
  std::vector<std::pair<std::size_t, std::size_t>> covers() const;

 private:
  Graph graph_;
  std::vector<Partition> elements_;
  std::vector<char> order_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// Greatest lower bound in R(G): connected components of block intersections.
/// Both inputs must be admissible (std::domain_error otherwise).
Partition meet(const Graph& g, const Partition& p, const Partition& q);
/// Least upper bound: transitive closure of the union of the relations.
Partition join(const Graph& g, const Partition& p, const Partition& q);

/// (G|q)/p for p <= q; throws std::domain_error otherwise.
Graph interval_quotient(const Graph& g, const Partition& p, const Partition& q);

/// Edges of G inside blocks of p, as indices into g.edges().
std::vector<std::size_t> zeta(const Graph& g, const Partition& p);
/// |R(G)| == 2^|E(G)|.
bool zeta_is_bijective(const Graph& g);

/// Order isomorphism test between the interval [a, b] of `lattice` and the
/// whole of `other`. Exhaustive over bijections, so only for small posets.
bool interval_isomorphic(const AdmissibleLattice& lattice, std::size_t a, std::size_t b,
                         const AdmissibleLattice& other);

}  // namespace chromhopf
