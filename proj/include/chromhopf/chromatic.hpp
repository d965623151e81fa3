#pragma once

#include <cstdint>
#include <vector>

#include "chromhopf/characters.hpp"
#include "chromhopf/graph.hpp"
#include "chromhopf/partition.hpp"
#include "chromhopf/polynomial.hpp"

namespace chromhopf {

/// Set partitions of V(G) whose blocks contain no edge.
std::vector<Partition> independent_partitions(const Graph& g);

/// P_chr(G) = Σ over independent partitions π of X(X-1)...(X-|π|+1).
Polynomial pchr_partition(const Graph& g);
/// P(G) = P(G∖e) - P(G/e) on the smallest edge, memoized per connected isoclass.
Polynomial pchr_deletion_contraction(const Graph& g);
/// P(G) = Σ_{~◁G} λ_chr(G|~) X^{cl(~)}.
Polynomial pchr_character_formula(const Graph& g);

enum class PolynomialEngine { Partition, DeletionContraction, Character };
Polynomial chromatic_polynomial(const Graph& g,
                                PolynomialEngine engine = PolynomialEngine::DeletionContraction);

/// Brute force over all maps V -> [k]; k = 0 gives 1 exactly for the empty graph.
std::uint64_t count_valid_colorings(const Graph& g, int k);

/// φ0(G) = X^|G|.
Polynomial phi_zero(const Graph& g);
GraphMorphism<Polynomial> phi_zero_morphism();
GraphMorphism<Polynomial> chromatic_morphism();

/// Ordered k-tuples of disjoint blocks covering V(G) (blocks may be empty),
/// each carrying an acyclic orientation of its induced subgraph.
/// Throws std::domain_error for k < 1.
std::uint64_t stanley_families(const Graph& g, int k);
/// Pairs (f, O) with f: V -> [k], O an acyclic orientation and f(x) <= f(y)
/// along every arc x -> y. Throws std::domain_error for k < 1.
std::uint64_t stanley_pairs(const Graph& g, int k);

}  // namespace chromhopf
