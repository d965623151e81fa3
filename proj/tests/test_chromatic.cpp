#include <doctest.h>

#include <random>
#include <set>
#include <stdexcept>

#include "chromhopf/bialgebra.hpp"
#include "chromhopf/chromatic.hpp"
#include "chromhopf/graph_enum.hpp"
#include "chromhopf/orientation.hpp"
#include "oracles.hpp"

using namespace chromhopf;

TEST_CASE("chromatic polynomial examples") {
  const Polynomial x = Polynomial::x();
  const Polynomial one = Polynomial::constant(1);
  CHECK(pchr_partition(Graph(0)) == one);
  CHECK(pchr_partition(Graph(1)) == x);
  CHECK(pchr_partition(Graph(3)) == x * x * x);
  CHECK(pchr_partition(parse_graph("2: 1-2")) == x * x - x);
  CHECK(pchr_partition(parse_graph("3: 1-2, 2-3, 1-3")).to_strings() ==
        std::vector<std::string>{"0", "2", "-3", "1"});
  CHECK(pchr_partition(path_graph(3)) == x * (x - one) * (x - one));
  const Polynomial c4 = chromatic_polynomial(cycle_graph(4));
  CHECK(c4 == (x - one) * (x - one) * (x - one) * (x - one) + (x - one));
}

TEST_CASE("independent partitions match the grow oracle") {
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : graph_isoclasses(n)) {
      const auto found = independent_partitions(g);
      const std::set<Partition> as_set(found.begin(), found.end());
      CHECK(as_set.size() == found.size());
      CHECK(as_set == oracle::independent_partitions(g));
    }
  }
}

TEST_CASE("polynomial engines agree with brute-force colorings") {
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : graph_isoclasses(n)) {
      const Polynomial p = pchr_partition(g);
      CHECK(p == pchr_deletion_contraction(g));
      CHECK(p == pchr_character_formula(g));
      CHECK(p == oracle::chromatic(g));
      for (int k = 0; k <= 4; ++k) {
        CHECK(p.eval(Rational(k)) == Rational(static_cast<long>(count_valid_colorings(g, k))));
        CHECK(count_valid_colorings(g, k) == oracle::proper_colorings(g, k));
      }
    }
  }
}

TEST_CASE("polynomial engines agree on random larger graphs") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Graph g = oracle::random_graph(6 + trial % 2, rng);
    const Polynomial p = pchr_deletion_contraction(g);
    CHECK(p == pchr_partition(g));
    CHECK(p == pchr_character_formula(g));
    CHECK(p == oracle::chromatic(g));
  }
}

TEST_CASE("coloring counts at zero and negative k") {
  CHECK(count_valid_colorings(Graph(0), 0) == 1);
  CHECK(count_valid_colorings(Graph(2), 0) == 0);
  CHECK(count_valid_colorings(parse_graph("3: 1-2, 2-3, 1-3"), 3) == 6);
  CHECK_THROWS_AS(count_valid_colorings(Graph(1), -1), std::domain_error);
}

TEST_CASE("chromatic polynomial is a morphism for both coproducts") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 5);
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : graph_isoclasses(n)) {
      const Polynomial p = chromatic_polynomial(g);
      const Rational a(num(rng), den(rng));
      const Rational b(num(rng), den(rng));

      Rational sum_side;
      for (const auto& [pair, c] : restriction_coproduct(g)) {
        sum_side += c * chromatic_polynomial(pair.first).eval(a) *
                    chromatic_polynomial(pair.second).eval(b);
      }
      CHECK(sum_side == p.eval(a + b));
      CHECK(compose_sum(p).eval(a, b) == p.eval(a + b));

      if (n <= 4) {
        Rational product_side;
        for (const auto& [pair, c] : contraction_coproduct(g)) {
          product_side += c * chromatic_polynomial(pair.first).eval(a) *
                          chromatic_polynomial(pair.second).eval(b);
        }
        CHECK(product_side == p.eval(a * b));
      }
      CHECK(p.eval(Rational(1)) == (is_edgeless(g) ? Rational(1) : Rational(0)));
    }
  }
}

TEST_CASE("coefficient signs and support") {
  for (int n = 1; n <= 6; ++n) {
    for (const Graph& g : graph_isoclasses(n)) {
      const Polynomial p = chromatic_polynomial(g);
      const int cc = component_count(g);
      CHECK(p.degree() == n);
      for (int i = 0; i <= n; ++i) {
        const Rational a = p.coefficient(i);
        if (i < cc) {
          CHECK(a.is_zero());
        } else {
          CHECK(a.sign() == ((n - i) % 2 == 0 ? 1 : -1));
        }
      }
      CHECK(-p.coefficient(n - 1) == Rational(static_cast<long>(g.edge_count())));
    }
  }
}

TEST_CASE("orientation counts at negative integers") {
  CHECK(stanley_families(parse_graph("2: 1-2"), 1) == 2);
  CHECK(stanley_families(parse_graph("3: 1-2, 2-3, 1-3"), 1) == 6);
  CHECK(stanley_families(Graph(2), 2) == 4);
  CHECK(stanley_pairs(Graph(2), 2) == 4);
  CHECK_THROWS_AS(stanley_families(Graph(1), 0), std::domain_error);
  CHECK_THROWS_AS(stanley_pairs(Graph(1), 0), std::domain_error);
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : graph_isoclasses(n)) {
      const Polynomial p = chromatic_polynomial(g);
      for (int k = 1; k <= 3; ++k) {
        Rational value = p.eval(Rational(-k));
        if (n % 2 == 1) {
          value = -value;
        }
        const Rational families(static_cast<long>(stanley_families(g, k)));
        const Rational pairs(static_cast<long>(stanley_pairs(g, k)));
        CHECK(families == value);
        CHECK(pairs == value);
      }
      CHECK(stanley_families(g, 1) == count_acyclic_orientations(g));
    }
  }
}

TEST_CASE("chromatic morphism equals phi zero acted on by the chromatic character") {
  const auto chr = chromatic_morphism();
  const auto phi0 = phi_zero_morphism();
  CHECK(phi0(Graph(3)) == Polynomial::monomial(1, 3));
  CHECK(phi_zero(parse_graph("2: 1-2")) == Polynomial::monomial(1, 2));
  for (int n = 0; n <= 4; ++n) {
    for (const Graph& g : graph_isoclasses(n)) {
      CHECK(chr(g) == pchr_partition(g));
      CHECK(act(phi0, chromatic_character())(g) == chr(g));
    }
  }
}
