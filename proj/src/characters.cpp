#include "chromhopf/characters.hpp"

#include <stdexcept>

#include "chromhopf/chromatic.hpp"
#include "chromhopf/forests.hpp"

namespace chromhopf {

Character::Character(Rule rule) : state_(std::make_shared<State>()) {
  state_->rule = std::move(rule);
}

Character Character::from_function(std::function<Rational(const Graph&)> rule) {
  return Character([rule = std::move(rule)](const Graph& g, const Character&) { return rule(g); });
}

Rational Character::connected_value(const Graph& g, const CanonicalKey& key) const {
  {
    std::lock_guard lock(state_->mutex);
    if (auto it = state_->memo.find(key); it != state_->memo.end()) {
      return it->second;
    }
  }
  Rational value = state_->rule(g, *this);
  std::lock_guard lock(state_->mutex);
  // Another thread may have stored the same value meanwhile; keep the first.
  return state_->memo.try_emplace(key, std::move(value)).first->second;
}

Rational Character::operator()(const Graph& g) const {
  Rational out(1);
  for (VertexSet c : connected_components(g)) {
    const Graph part = restrict(g, c);
    out *= connected_value(part, canonical_key(part));
    if (out.is_zero()) {
      break;
    }
  }
  return out;
}

Rational Character::operator()(const CanonicalKey& key) const {
  return connected_value(key.representative(), key);
}

Rational Character::operator()(const Monomial& m) const {
  Rational out(1);
  for (const CanonicalKey& key : m.factors()) {
    out *= (*this)(key);
  }
  return out;
}

Rational Character::operator()(const HgrElement& x) const {
  Rational out(0);
  for (const auto& [m, c] : x) {
    out += c * (*this)(m);
  }
  return out;
}

Character counit_character() {
  return Character::from_function(
      [](const Graph& g) { return Rational(g.order() == 1 ? 1 : 0); });
}

Character lambda_zero() {
  return Character::from_function([](const Graph&) { return Rational(1); });
}

Character chromatic_character(ChromaticEngine engine) {
  switch (engine) {
    case ChromaticEngine::Derivative:
      return Character::from_function(
          [](const Graph& g) { return pchr_partition(g).coefficient(1); });
    case ChromaticEngine::Forest:
      return Character::from_function([](const Graph& g) {
        if (g.order() == 1) {
          return Rational(1);
        }
        Rational sum(0);
        for (const NestedForest& f : nested_forests(g)) {
          sum += Rational(f.members.size() % 2 == 0 ? 1 : -1);
        }
        return sum;
      });
    case ChromaticEngine::DeletionContraction:
      break;
  }
  return Character([](const Graph& g, const Character& self) {
    if (g.order() == 1) {
      return Rational(1);
    }
    const Edge e = g.edges().front();
    if (is_bridge(g, e)) {
      return -self(contract_edge(g, e));
    }
    return self(delete_edge(g, e)) - self(contract_edge(g, e));
  });
}

Character unsigned_chromatic_character() {
  const Character chr = chromatic_character();
  return Character::from_function([chr](const Graph& g) {
    return degree(g) % 2 == 0 ? chr(g) : -chr(g);
  });
}

Character convolve(const Character& lambda, const Character& mu) {
  return Character::from_function([lambda, mu](const Graph& g) {
    Rational sum(0);
    for_each_admissible_partition(g, [&](const Partition& p) {
      sum += lambda(contract(g, p)) * mu(extract(g, p));
    });
    return sum;
  });
}

Character invert(const Character& lambda) {
  const Rational c = lambda(Graph(1));
  if (c.is_zero()) {
    throw std::domain_error("a character with value 0 on K1 is not invertible");
  }
  // From Σ_~ λ(G/~) ν(G|~) = 0: the single-block term is c·ν(G), the
  // singleton term is λ(G)·c^-n, the rest involve ν on smaller graphs.
  return Character([lambda, c](const Graph& g, const Character& self) {
    const int n = g.order();
    if (n == 1) {
      return Rational(1) / c;
    }
    Rational rest = lambda(g) * pow(c, -n);
    for_each_admissible_partition(g, [&](const Partition& p) {
      if (p.block_count() == 1 || p.block_count() == n) {
        return;
      }
      rest += lambda(contract(g, p)) * self(extract(g, p));
    });
    return -rest / c;
  });
}

}  // namespace chromhopf
