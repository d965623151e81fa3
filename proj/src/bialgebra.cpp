#include "chromhopf/bialgebra.hpp"

#include <map>
#include <stdexcept>

#include "chromhopf/forests.hpp"

namespace chromhopf {

namespace {

void require_antipode_input(const Graph& g) {
  if (g.order() < 2 || !is_connected(g)) {
    throw std::domain_error("the antipode formula needs a connected graph with >= 2 vertices");
  }
}

Monomial quotient_key(const Graph& g) { return monomial_key(g).without_singletons(); }

class RecursiveAntipode {
 public:
  const HgrElement& of_connected(const Graph& g) {
    CanonicalKey key = canonical_key(g);
    if (auto it = memo_.find(key); it != memo_.end()) {
      return it->second;
    }
    HgrElement result;
    if (g.order() >= 2) {
      result.add(Monomial({key}), Rational(-1));
      const int n = g.order();
      for_each_admissible_partition(g, [&](const Partition& p) {
        if (p.block_count() == 1 || p.block_count() == n) {
          return;
        }
        HgrElement term = HgrElement::basis(quotient_key(contract(g, p)));
        term = multiply(term, of_graph(extract(g, p)));
        result -= term;
      });
    } else {
      result.add(Monomial(), Rational(1));
    }
    return memo_.emplace(std::move(key), std::move(result)).first->second;
  }

  HgrElement of_graph(const Graph& g) {
    HgrElement result = HgrElement::basis(Monomial());
    for (VertexSet c : connected_components(g)) {
      result = multiply(result, of_connected(restrict(g, c)));
    }
    return result;
  }

 private:
  std::map<CanonicalKey, HgrElement> memo_;
};

template <class Key, class Tensor, class F>
Tensor linear_tensor(const LinComb<Key>& x, F&& per_basis) {
  Tensor out;
  for (const auto& [key, c] : x) {
    for (const auto& [pair, d] : per_basis(key)) {
      out.add(pair, c * d);
    }
  }
  return out;
}

}  // namespace

HgrElement isoclass(const Graph& g) { return HgrElement::basis(monomial_key(g)); }

HgrElement multiply(const HgrElement& a, const HgrElement& b) {
  return chromhopf::multiply(a, b, [](const Monomial& x, const Monomial& y) { return x * y; });
}

HGRElement multiply(const HGRElement& a, const HGRElement& b) {
  return chromhopf::multiply(a, b,
                             [](const Graph& x, const Graph& y) { return disjoint_union(x, y); });
}

HgrTensor restriction_coproduct(const Monomial& m) {
  HgrTensor out;
  for (const auto& [left, right] : restriction_coproduct(m.graph())) {
    out.add({monomial_key(left.first), monomial_key(left.second)}, right);
  }
  return out;
}

HgrTensor restriction_coproduct(const HgrElement& x) {
  return linear_tensor<Monomial, HgrTensor>(
      x, [](const Monomial& m) { return restriction_coproduct(m); });
}

HGRTensor restriction_coproduct(const Graph& g) {
  HGRTensor out;
  const VertexSet all = g.vertices();
  for (VertexSet left = 0;; left = (left - all) & all) {
    out.add({restrict(g, left), restrict(g, all & ~left)}, Rational(1));
    if (left == all) {
      break;
    }
  }
  return out;
}

HGRTensor restriction_coproduct(const HGRElement& x) {
  return linear_tensor<Graph, HGRTensor>(x,
                                         [](const Graph& g) { return restriction_coproduct(g); });
}

Rational restriction_counit(const Monomial& m) { return Rational(m.is_unit() ? 1 : 0); }

Rational restriction_counit(const Graph& g) { return Rational(g.order() == 0 ? 1 : 0); }

HgrTensor contraction_coproduct(const Monomial& m) {
  HgrTensor out;
  for (const auto& [pair, c] : contraction_coproduct(m.graph())) {
    out.add({monomial_key(pair.first), monomial_key(pair.second)}, c);
  }
  return out;
}

HgrTensor contraction_coproduct(const HgrElement& x) {
  return linear_tensor<Monomial, HgrTensor>(
      x, [](const Monomial& m) { return contraction_coproduct(m); });
}

HGRTensor contraction_coproduct(const Graph& g) {
  HGRTensor out;
  for_each_admissible_partition(g, [&](const Partition& p) {
    out.add({contract(g, p), extract(g, p)}, Rational(1));
  });
  return out;
}

HGRTensor contraction_coproduct(const HGRElement& x) {
  return linear_tensor<Graph, HGRTensor>(x,
                                         [](const Graph& g) { return contraction_coproduct(g); });
}

Rational contraction_counit(const Monomial& m) {
  for (const auto& f : m.factors()) {
    if (f.order() != 1) {
      return Rational(0);
    }
  }
  return Rational(1);
}

Rational contraction_counit(const Graph& g) { return Rational(is_edgeless(g) ? 1 : 0); }

HgrElement to_quotient(const HgrElement& x) {
  return x.map_keys([](const Monomial& m) { return m.without_singletons(); });
}

HgrElement antipode_forest(const Graph& g) {
  require_antipode_input(g);
  HgrElement out;
  for (const NestedForest& forest : nested_forests(g)) {
    Monomial term;
    for (const Graph& factor : forest_evaluate(g, forest)) {
      term = term * quotient_key(factor);
    }
    out.add(term, Rational(forest.members.size() % 2 == 0 ? 1 : -1));
  }
  return out;
}

HgrElement antipode_recursive(const Graph& g) {
  require_antipode_input(g);
  RecursiveAntipode engine;
  return engine.of_connected(g);
}

HgrElement antipode(const HgrElement& x, AntipodeEngine engine) {
  RecursiveAntipode recursive;
  HgrElement out;
  for (const auto& [m, c] : x) {
    HgrElement image = HgrElement::basis(Monomial());
    const Monomial reduced = m.without_singletons();
    for (const CanonicalKey& factor : reduced.factors()) {
      const Graph rep = factor.representative();
      image = multiply(image, engine == AntipodeEngine::Forest ? antipode_forest(rep)
                                                               : recursive.of_connected(rep));
    }
    out += image * c;
  }
  return out;
}

HgrTensor3 cointeraction_lhs(const HgrElement& x) {
  HgrTensor3 out;
  for (const auto& [split, c] : restriction_coproduct(x)) {
    const HgrTensor left = contraction_coproduct(split.first);
    const HgrTensor right = contraction_coproduct(split.second);
    for (const auto& [l, cl] : left) {
      for (const auto& [r, cr] : right) {
        out.add({l.first, r.first, l.second * r.second}, c * cl * cr);
      }
    }
  }
  return out;
}

HgrTensor3 cointeraction_rhs(const HgrElement& x) {
  return apply_first(contraction_coproduct(x),
                     [](const Monomial& m) { return restriction_coproduct(m); });
}

HGRTensor3 cointeraction_lhs(const HGRElement& x) {
  HGRTensor3 out;
  for (const auto& [split, c] : restriction_coproduct(x)) {
    const HGRTensor left = contraction_coproduct(split.first);
    const HGRTensor right = contraction_coproduct(split.second);
    for (const auto& [l, cl] : left) {
      for (const auto& [r, cr] : right) {
        out.add({l.first, r.first, disjoint_union(l.second, r.second)}, c * cl * cr);
      }
    }
  }
  return out;
}

HGRTensor3 cointeraction_rhs(const HGRElement& x) {
  return apply_first(contraction_coproduct(x),
                     [](const Graph& g) { return restriction_coproduct(g); });
}

HgrElement projection(const HGRElement& x) {
  return x.map_keys([](const Graph& g) { return monomial_key(g); });
}

LinComb<std::pair<Graph, Monomial>> coaction(const HGRElement& x) {
  LinComb<std::pair<Graph, Monomial>> out;
  for (const auto& [pair, c] : contraction_coproduct(x)) {
    out.add({pair.first, monomial_key(pair.second)}, c);
  }
  return out;
}

}  // namespace chromhopf
