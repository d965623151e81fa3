#include <doctest.h>

#include <random>
#include <stdexcept>

#include "chromhopf/characters.hpp"
#include "chromhopf/chromatic.hpp"
#include "chromhopf/graph_enum.hpp"
#include "oracles.hpp"

using namespace chromhopf;

namespace {

Rational factorial_int(int n) {
  Rational out(1);
  for (int i = 2; i <= n; ++i) {
    out *= Rational(i);
  }
  return out;
}

// λ_chr from the brute-force interpolated polynomial: coefficient of X.
Rational chromatic_oracle(const Graph& g) {
  return oracle::chromatic(g).coefficient(1);
}

}  // namespace

TEST_CASE("chromatic character on named graphs") {
  const Character chr = chromatic_character();
  CHECK(chr(Graph(1)) == Rational(1));
  CHECK(chr(parse_graph("2: 1-2")) == Rational(-1));
  CHECK(chr(parse_graph("3: 1-2, 1-3, 2-3")) == Rational(2));
  CHECK(chr(parse_graph("3: 1-2, 2-3")) == Rational(1));
  CHECK(chr(complete_graph(4)) == Rational(-6));
  for (int n = 1; n <= 6; ++n) {
    const Rational sign = n % 2 == 1 ? Rational(1) : Rational(-1);
    CHECK(chr(complete_graph(n)) == sign * factorial_int(n - 1));
    CHECK(chr(path_graph(n)) == sign);
  }
  CHECK(chr(Graph(0)) == Rational(1));
  CHECK(chr(Graph(2)) == Rational(1));
  CHECK(chr(parse_graph("4: 1-2, 3-4")) == Rational(1));
}

TEST_CASE("chromatic character on all connected four-vertex graphs") {
  const Character chr = chromatic_character();
  CHECK(chr(parse_graph("4: 1-2, 1-3, 1-4, 2-3, 2-4, 3-4")) == Rational(-6));
  CHECK(chr(parse_graph("4: 1-2, 1-3, 1-4, 2-3, 2-4")) == Rational(-4));  // diamond
  CHECK(chr(parse_graph("4: 1-2, 2-3, 1-3, 3-4")) == Rational(-2));       // paw
  CHECK(chr(cycle_graph(4)) == Rational(-3));
  CHECK(chr(parse_graph("4: 1-2, 1-3, 1-4")) == Rational(-1));  // star
  CHECK(chr(path_graph(4)) == Rational(-1));
}

TEST_CASE("chromatic character engines agree with each other and the oracle") {
  const Character a = chromatic_character(ChromaticEngine::Derivative);
  const Character b = chromatic_character(ChromaticEngine::Forest);
  const Character c = chromatic_character(ChromaticEngine::DeletionContraction);
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_isoclasses(n)) {
      const Rational value = c(g);
      CHECK(a(g) == value);
      CHECK(b(g) == value);
      if (n <= 5) {
        CHECK(chromatic_oracle(g) == value);
      }
    }
  }
}

TEST_CASE("convolution examples") {
  const Character chr = chromatic_character();
  const Character zero = lambda_zero();
  const Graph k2 = parse_graph("2: 1-2");
  const Graph k3 = parse_graph("3: 1-2, 1-3, 2-3");
  CHECK(convolve(zero, zero)(k2) == Rational(2));
  CHECK(convolve(chr, zero)(k3) == Rational(0));
  CHECK(convolve(zero, chr)(k3) == Rational(0));
  CHECK(convolve(chr, zero)(Graph(3)) == Rational(1));
  CHECK(invert(zero)(k2) == Rational(-1));
  CHECK(invert(zero)(k3) == Rational(2));
  CHECK(invert(counit_character())(k3) == Rational(0));
  CHECK(invert(counit_character())(Graph(2)) == Rational(1));
}

TEST_CASE("chromatic character is the inverse of the constant character") {
  const Character chr = chromatic_character();
  const Character zero = lambda_zero();
  const Character left = convolve(chr, zero);
  const Character right = convolve(zero, chr);
  const Character inverse = invert(zero);
  const Character eps = counit_character();
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : connected_isoclasses(n)) {
      CHECK(left(g) == eps(g));
      CHECK(right(g) == eps(g));
      CHECK(inverse(g) == chr(g));
    }
  }
}

TEST_CASE("convolution monoid laws") {
  const Character eps = counit_character();
  const Character chr = chromatic_character();
  const Character zero = lambda_zero();
  const Character odd = Character::from_function([](const Graph& g) {
    return Rational(static_cast<long>(g.edge_count()) + 1, g.order());
  });
  const Character lhs = convolve(convolve(odd, chr), zero);
  const Character rhs = convolve(odd, convolve(chr, zero));
  const Character odd_inverse = invert(odd);
  const Character back = convolve(odd, odd_inverse);
  const Character back_left = convolve(odd_inverse, odd);
  for (int n = 0; n <= 4; ++n) {
    for (const Graph& g : graph_isoclasses(n)) {
      CHECK(lhs(g) == rhs(g));
      CHECK(convolve(eps, odd)(g) == odd(g));
      CHECK(convolve(odd, eps)(g) == odd(g));
      CHECK(back(g) == eps(g));
      CHECK(back_left(g) == eps(g));
    }
  }
}

TEST_CASE("characters are multiplicative and linear") {
  const Character chr = chromatic_character();
  const Graph g = parse_graph("5: 1-2, 2-3, 1-3, 4-5");
  CHECK(chr(g) == Rational(-2));
  CHECK(chr(monomial_key(g)) == Rational(-2));
  const HgrElement x = isoclass(parse_graph("2: 1-2")) * Rational(3) +
                       isoclass(parse_graph("3: 1-2, 2-3, 1-3"));
  CHECK(chr(x) == Rational(-1));
}

TEST_CASE("invert rejects a zero value on the one-vertex graph") {
  const Character bad = Character::from_function([](const Graph& g) {
    return g.order() == 1 ? Rational(0) : Rational(1);
  });
  CHECK_THROWS_AS(invert(bad)(Graph(1)), std::domain_error);
}

TEST_CASE("sign, forest and bound properties of the chromatic character") {
  const Character chr = chromatic_character();
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : graph_isoclasses(n)) {
      const Rational value = chr(g);
      const Rational signed_value = degree(g) % 2 == 0 ? value : -value;
      CHECK(signed_value >= Rational(1));
      CHECK((value.abs() == Rational(1)) == is_forest(g));
      if (is_connected(g)) {
        CHECK(value.abs() <= factorial_int(n - 1));
        CHECK((value.abs() == factorial_int(n - 1)) == is_complete(g));
      }
    }
  }
}

TEST_CASE("bridge lemma") {
  const Character chr = chromatic_character();
  for (int n = 2; n <= 6; ++n) {
    for (const Graph& g : graph_isoclasses(n)) {
      for (const Edge& e : g.edges()) {
        if (is_bridge(g, e)) {
          CHECK(chr(g) == -chr(delete_edge(g, e)));
          CHECK(chr(g) == -chr(contract_edge(g, e)));
        }
      }
    }
  }
}

TEST_CASE("adding edges does not decrease the chromatic character magnitude") {
  const Character chr = chromatic_character();
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 5);
    const Graph g = oracle::random_graph(n, rng);
    Graph h = g;
    for (int u = 0; u < n; ++u) {
      for (int v = u + 1; v < n; ++v) {
        if (!h.has_edge(u, v) && rng() % 3 == 0) {
          h.add_edge(u, v);
        }
      }
    }
    CHECK(chr(g).abs() <= chr(h).abs());
  }
}

TEST_CASE("action of characters on polynomial morphisms") {
  const GraphMorphism<Polynomial> phi0 = phi_zero_morphism();
  const Polynomial x = Polynomial::x();
  const Graph k2 = parse_graph("2: 1-2");
  CHECK(act(phi0, lambda_zero())(k2) == x * x + x);
  CHECK(act(phi0, chromatic_character())(parse_graph("3: 1-2, 1-3, 2-3")) == falling_factorial(3));

  const Character chr = chromatic_character();
  const Character zero = lambda_zero();
  const auto nested = act(act(phi0, chr), zero);
  const auto combined = act(phi0, convolve(chr, zero));
  const auto unit = act(phi0, counit_character());
  for (int n = 0; n <= 4; ++n) {
    for (const Graph& g : graph_isoclasses(n)) {
      CHECK(nested(g) == combined(g));
      CHECK(unit(g) == phi0(g));
      CHECK(act(phi0, chr)(g) == oracle::chromatic(g));
    }
  }
}

TEST_CASE("unsigned chromatic character") {
  const Character u = unsigned_chromatic_character();
  CHECK(u(complete_graph(4)) == Rational(6));
  CHECK(u(parse_graph("2: 1-2")) == Rational(1));
  CHECK(u(cycle_graph(4)) == Rational(3));
}
