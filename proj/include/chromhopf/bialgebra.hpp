#pragma once

#include <tuple>
#include <utility>

#include "chromhopf/canonical.hpp"
#include "chromhopf/graph.hpp"
#include "chromhopf/lincomb.hpp"

namespace chromhopf {

/// Commutative graph algebra: combinations of isoclass monomials.
using HgrElement = LinComb<Monomial>;
/// Noncommutative graph algebra: combinations of indexed graphs.
using HGRElement = LinComb<Graph>;

using HgrTensor = LinComb<std::pair<Monomial, Monomial>>;
using HgrTensor3 = LinComb<std::tuple<Monomial, Monomial, Monomial>>;
using HGRTensor = LinComb<std::pair<Graph, Graph>>;
using HGRTensor3 = LinComb<std::tuple<Graph, Graph, Graph>>;

HgrElement isoclass(const Graph& g);

HgrElement multiply(const HgrElement& a, const HgrElement& b);
/// Indexed product: concatenation GH with H shifted after G.
HGRElement multiply(const HGRElement& a, const HGRElement& b);

// Restriction coproduct: Δ(G) = Σ over ordered bipartitions V = I ⊔ J of
// G|_I ⊗ G|_J. The counit is 1 on the empty graph and 0 elsewhere.

HgrTensor restriction_coproduct(const Monomial& m);
HgrTensor restriction_coproduct(const HgrElement& x);
HGRTensor restriction_coproduct(const Graph& g);
HGRTensor restriction_coproduct(const HGRElement& x);
Rational restriction_counit(const Monomial& m);
Rational restriction_counit(const Graph& g);

// Contraction–extraction coproduct: δ(G) = Σ over admissible ~ of
// G/~ ⊗ G|~. The counit is 1 on edgeless graphs and 0 elsewhere.

HgrTensor contraction_coproduct(const Monomial& m);
HgrTensor contraction_coproduct(const HgrElement& x);
HGRTensor contraction_coproduct(const Graph& g);
HGRTensor contraction_coproduct(const HGRElement& x);
Rational contraction_counit(const Monomial& m);
Rational contraction_counit(const Graph& g);

/// Image in the quotient by <K1 - 1>: K1 factors erased from every monomial.
HgrElement to_quotient(const HgrElement& x);

/// Antipode of the quotient bialgebra as a signed sum over nested forests.
/// Needs a connected graph with at least two vertices.
HgrElement antipode_forest(const Graph& g);
/// Same antipode from S'(G) = -G - Σ_{~ ≠ ~0, ~1} (G/~) S'(G|~).
HgrElement antipode_recursive(const Graph& g);

enum class AntipodeEngine { Forest, Recursive };

/// Multiplicative extension to the quotient algebra, with S'(1) = 1.
HgrElement antipode(const HgrElement& x, AntipodeEngine engine = AntipodeEngine::Recursive);

/// m ∘ (δ ⊗ δ) ∘ Δ with the middle legs swapped: a1 ⊗ a2 ⊗ b1 b2.
HgrTensor3 cointeraction_lhs(const HgrElement& x);
/// (Δ ⊗ Id) ∘ δ.
HgrTensor3 cointeraction_rhs(const HgrElement& x);
HGRTensor3 cointeraction_lhs(const HGRElement& x);
HGRTensor3 cointeraction_rhs(const HGRElement& x);

/// Sends each indexed graph to its isoclass.
HgrElement projection(const HGRElement& x);
/// (Id ⊗ projection) ∘ δ.
LinComb<std::pair<Graph, Monomial>> coaction(const HGRElement& x);

}  // namespace chromhopf
