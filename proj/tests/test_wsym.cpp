#include <doctest.h>

#include <set>
#include <stdexcept>

#include "chromhopf/bialgebra.hpp"
#include "chromhopf/chromatic.hpp"
#include "chromhopf/graph_enum.hpp"
#include "chromhopf/wsym.hpp"
#include "oracles.hpp"

using namespace chromhopf;

namespace {

// Partition from 1-based blocks.
Partition P(std::initializer_list<std::initializer_list<int>> blocks) {
  int n = 0;
  std::vector<VertexSet> sets;
  for (const auto& b : blocks) {
    VertexSet s = 0;
    for (int v : b) {
      s |= VertexSet{1} << (v - 1);
      n = std::max(n, v);
    }
    sets.push_back(s);
  }
  return Partition::from_blocks(n, sets);
}

PackedWord w(std::initializer_list<int> letters) { return PackedWord(std::vector<int>(letters)); }

WSymElement W(const Partition& p) { return WSymElement::basis(p); }

}  // namespace

TEST_CASE("packed words") {
  CHECK(pack({3, 5, 3}) == w({1, 2, 1}));
  CHECK(pack({}) == PackedWord());
  CHECK(is_packed({2, 1, 2}));
  CHECK_FALSE(is_packed({1, 3}));
  CHECK_THROWS_AS(PackedWord(std::vector<int>{2}), std::domain_error);
  CHECK(partition_of_word(w({1, 2, 1})) == P({{1, 3}, {2}}));
  CHECK(partition_of_word(w({1, 2})) == partition_of_word(w({2, 1})));
  CHECK(w({1, 2, 1}).str() == "121");
  CHECK(w({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}).str() == "1.2.3.4.5.6.7.8.9.10");
  CHECK(w({2, 1}).max_letter() == 2);
}

TEST_CASE("W basis expansion") {
  WordElement two;
  two.add(w({1, 2}), 1);
  two.add(w({2, 1}), 1);
  CHECK(expand_W(P({{1}, {2}})) == two);
  CHECK(expand_W(P({{1, 2}})) == WordElement::basis(w({1, 1})));
  WordElement three;
  three.add(w({1, 2, 1}), 1);
  three.add(w({2, 1, 2}), 1);
  CHECK(expand_W(P({{1, 3}, {2}})) == three);
  for (int n = 0; n <= 5; ++n) {
    for (const Partition& pi : set_partitions(n)) {
      const WordElement x = expand_W(pi);
      Rational expected(1);
      for (int i = 2; i <= pi.block_count(); ++i) {
        expected *= Rational(i);
      }
      CHECK(Rational(static_cast<long>(x.size())) == expected);
      for (const auto& [word, c] : x) {
        CHECK(partition_of_word(word) == pi);
        CHECK(c == Rational(1));
      }
    }
  }
}

TEST_CASE("WSym product examples") {
  CHECK(wsym_product(P({{1, 2}}), P({{1}})) == W(P({{1, 2}, {3}})) + W(P({{1, 2, 3}})));
  CHECK(wsym_product(P({{1}, {2}}), P({{1}})) ==
        W(P({{1}, {2}, {3}})) + W(P({{1, 3}, {2}})) + W(P({{1}, {2, 3}})));
}

TEST_CASE("WSym product matches the block pairing oracle and the word product") {
  for (int k = 0; k <= 3; ++k) {
    for (int l = 0; l <= 3; ++l) {
      for (const Partition& pi : set_partitions(k)) {
        for (const Partition& rho : set_partitions(l)) {
          const WSymElement product = wsym_product(pi, rho);
          std::set<Partition> support;
          for (const auto& [omega, c] : product) {
            CHECK(c == Rational(1));
            support.insert(omega);
          }
          CHECK(support == oracle::wsym_product_terms(pi, rho));
        }
      }
    }
  }
}

TEST_CASE("WSym coproduct examples") {
  WSymTensor single;
  single.add({P({{1}}), Partition()}, 1);
  single.add({Partition(), P({{1}})}, 1);
  CHECK(wsym_coproduct(P({{1}})) == single);

  const Partition pi = P({{1, 3}, {2}, {4}});
  WSymTensor expected;
  expected.add({pi, Partition()}, 1);
  expected.add({Partition(), pi}, 1);
  expected.add({P({{1, 3}, {2}}), P({{1}})}, 1);
  expected.add({P({{1, 2}, {3}}), P({{1}})}, 1);
  expected.add({P({{1}, {2}}), P({{1, 2}})}, 1);
  expected.add({P({{1, 2}}), P({{1}, {2}})}, 1);
  expected.add({P({{1}}), P({{1, 2}, {3}})}, 1);
  expected.add({P({{1}}), P({{1, 3}, {2}})}, 1);
  CHECK(wsym_coproduct(pi) == expected);
}

TEST_CASE("WSym coproduct is cocommutative") {
  for (int n = 0; n <= 5; ++n) {
    for (const Partition& pi : set_partitions(n)) {
      const WSymTensor d = wsym_coproduct(pi);
      WSymTensor swapped;
      for (const auto& [pair, c] : d) {
        swapped.add({pair.second, pair.first}, c);
      }
      CHECK(swapped == d);
    }
  }
}

TEST_CASE("noncommutative chromatic function examples") {
  CHECK(nc_chromatic(parse_graph("2: 1-2")) == W(P({{1}, {2}})));
  CHECK(nc_chromatic(complete_graph(3)) == W(P({{1}, {2}, {3}})));
  CHECK(nc_chromatic(path_graph(3)) == W(P({{1}, {2}, {3}})) + W(P({{1, 3}, {2}})));
  CHECK(nc_chromatic(Graph(0)) == W(Partition()));
}

TEST_CASE("noncommutative chromatic function is a Hopf morphism") {
  for (int n = 0; n <= 4; ++n) {
    for (const Graph& g : labeled_graphs(n)) {
      WSymTensor image;
      for (const auto& [pair, c] : restriction_coproduct(g)) {
        for (const auto& [a, ca] : nc_chromatic(pair.first)) {
          for (const auto& [b, cb] : nc_chromatic(pair.second)) {
            image.add({a, b}, c * ca * cb);
          }
        }
      }
      CHECK(wsym_coproduct(nc_chromatic(g)) == image);
    }
  }
  const std::vector<Graph> small = {Graph(1), parse_graph("2: 1-2"), Graph(2), path_graph(3),
                                    parse_graph("3: 1-3")};
  for (const Graph& g : small) {
    for (const Graph& h : small) {
      CHECK(nc_chromatic(disjoint_union(g, h)) ==
            wsym_product(nc_chromatic(g), nc_chromatic(h)));
    }
  }
}

TEST_CASE("word expansion equals packed valid colorings") {
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : graph_isoclasses(n)) {
      CHECK(expand(nc_chromatic(g)) == nc_chromatic_words(g));
    }
  }
}

TEST_CASE("multipartite witness is unitriangular") {
  for (int n = 0; n <= 5; ++n) {
    for (const Partition& pi : set_partitions(n)) {
      if (pi.block_count() > 3) {
        continue;
      }
      const WSymElement image = nc_chromatic(multipartite_witness(pi));
      CHECK(image.coefficient(pi) == Rational(1));
      for (const auto& [omega, c] : image) {
        if (!(omega == pi)) {
          CHECK(omega.block_count() > pi.block_count());
        }
      }
    }
  }
}

TEST_CASE("packed coloring morphism examples") {
  CHECK(phi0_nc(Graph(1)) == WordElement::basis(w({1})));
  WordElement edge;
  edge.add(w({1}), 1);
  edge.add(w({1, 2}), 1);
  edge.add(w({2, 1}), 1);
  CHECK(phi0_nc(parse_graph("2: 1-2")) == edge);
  WordElement pair;
  pair.add(w({1, 1}), 1);
  pair.add(w({1, 2}), 1);
  pair.add(w({2, 1}), 1);
  CHECK(phi0_nc(Graph(2)) == pair);
}

TEST_CASE("Hilbert projection") {
  const Polynomial x = Polynomial::x();
  CHECK(hilbert_projection(WordElement::basis(w({1}))) == x);
  CHECK(hilbert_projection(phi0_nc(Graph(2))) == x * x);
  CHECK(hilbert_projection(nc_chromatic(parse_graph("2: 1-2"))) == pchr_partition(parse_graph("2: 1-2")));
  for (int n = 0; n <= 5; ++n) {
    for (const Graph& g : graph_isoclasses(n)) {
      CHECK(hilbert_projection(nc_chromatic(g)) == oracle::chromatic(g));
      CHECK(hilbert_projection(phi0_nc(g)) == Polynomial::monomial(1, n));
      CHECK(hilbert_projection(nc_chromatic(g)) == hilbert_projection(nc_chromatic_words(g)));
    }
  }
  for (int k = 0; k <= 4; ++k) {
    for (int l = 0; k + l <= 4; ++l) {
      for (const Partition& pi : set_partitions(k)) {
        for (const Partition& rho : set_partitions(l)) {
          CHECK(hilbert_projection(wsym_product(pi, rho)) ==
                hilbert_projection(W(pi)) * hilbert_projection(W(rho)));
        }
      }
    }
  }
}

TEST_CASE("noncommutative chromatic function from the packed coloring morphism") {
  const auto action = act(phi0_nc_morphism(), chromatic_character());
  WordElement edge;
  edge.add(w({1, 2}), 1);
  edge.add(w({2, 1}), 1);
  CHECK(action(parse_graph("2: 1-2")) == edge);
  for (int n = 0; n <= 4; ++n) {
    for (const Graph& g : labeled_graphs(n)) {
      CHECK(action(g) == expand(nc_chromatic(g)));
    }
  }
}
