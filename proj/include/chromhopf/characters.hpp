#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>

#include "chromhopf/bialgebra.hpp"
#include "chromhopf/canonical.hpp"
#include "chromhopf/graph.hpp"
#include "chromhopf/rational.hpp"

namespace chromhopf {

/// Character of (H_gr, m, δ): a rational value on every connected isoclass,
/// extended multiplicatively (the empty graph maps to 1).
///
/// Copies share one memo table guarded by a mutex. The rule is called
/// without the lock held, so rules may evaluate the character recursively on
/// smaller graphs through `self`.
class Character {
 public:
  /// Value on a connected graph with at least one vertex.
  using Rule = std::function<Rational(const Graph& connected, const Character& self)>;

  explicit Character(Rule rule);
  static Character from_function(std::function<Rational(const Graph&)> rule);

  Rational operator()(const Graph& g) const;
  Rational operator()(const Monomial& m) const;
  Rational operator()(const CanonicalKey& key) const;
  /// Linear extension.
  Rational operator()(const HgrElement& x) const;

 private:
  struct State {
    Rule rule;
    std::mutex mutex;
    std::map<CanonicalKey, Rational> memo;
  };
  Rational connected_value(const Graph& g, const CanonicalKey& key) const;
  std::shared_ptr<State> state_;
};

/// ε': 1 on edgeless graphs, else 0. Unit of the convolution.
Character counit_character();
/// λ0: constantly 1.
Character lambda_zero();

enum class ChromaticEngine {
  Derivative,           // coefficient of X in P_chr
  Forest,               // signed count of nested forests
  DeletionContraction,  // bridge-aware recursion
};

/// λ_chr, the inverse of λ0.
Character chromatic_character(ChromaticEngine engine = ChromaticEngine::DeletionContraction);
/// G -> (-1)^deg(G) λ_chr(G).
Character unsigned_chromatic_character();

/// (λ*μ)(G) = Σ_{~◁G} λ(G/~) μ(G|~).
Character convolve(const Character& lambda, const Character& mu);
/// Convolution inverse; throws std::domain_error when λ(K1) = 0.
Character invert(const Character& lambda);

/// Algebra morphism from the graph algebra into a commutative algebra A.
/// A needs +=, multiplication by Rational, and a default constructed zero.
template <class A>
class GraphMorphism {
 public:
  using Map = std::function<A(const Graph&)>;
  explicit GraphMorphism(Map map) : map_(std::move(map)) {}
  A operator()(const Graph& g) const { return map_(g); }

 private:
  Map map_;
};

/// (φ←λ)(G) = Σ_{~◁G} φ(G/~) λ(G|~).
template <class A>
GraphMorphism<A> act(const GraphMorphism<A>& phi, const Character& lambda) {
  return GraphMorphism<A>([phi, lambda](const Graph& g) {
    A out{};
    for_each_admissible_partition(g, [&](const Partition& p) {
      const Rational weight = lambda(extract(g, p));
      if (!weight.is_zero()) {
        out += phi(contract(g, p)) * weight;
      }
    });
    return out;
  });
}

}  // namespace chromhopf
