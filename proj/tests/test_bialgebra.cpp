#include <doctest.h>

#include <stdexcept>

#include "chromhopf/bialgebra.hpp"
#include "chromhopf/graph_enum.hpp"

using namespace chromhopf;

namespace {

Monomial m(std::initializer_list<const char*> parts) {
  Monomial out;
  for (const char* text : parts) {
    out = out * monomial_key(parse_graph(text));
  }
  return out;
}

const Monomial one{};
const char* const K1 = "1:";
const char* const K2 = "2: 1-2";
const char* const K3 = "3: 1-2, 1-3, 2-3";
const char* const P3 = "3: 1-2, 2-3";

HgrElement x(const char* text) { return isoclass(parse_graph(text)); }

}  // namespace

TEST_CASE("restriction coproduct examples") {
  HgrTensor expected;
  expected.add({m({K2}), one}, 1);
  expected.add({one, m({K2})}, 1);
  expected.add({m({K1}), m({K1})}, 2);
  CHECK(restriction_coproduct(x(K2)) == expected);

  HgrTensor triangle;
  triangle.add({m({K3}), one}, 1);
  triangle.add({one, m({K3})}, 1);
  triangle.add({m({K2}), m({K1})}, 3);
  triangle.add({m({K1}), m({K2})}, 3);
  CHECK(restriction_coproduct(x(K3)) == triangle);

  CHECK(restriction_coproduct(HgrElement::basis(one)) ==
        HgrTensor::basis({one, one}));
  // Restrictions are standardized, so the three ways to split off a vertex
  // collapse onto one indexed term.
  const HGRTensor indexed = restriction_coproduct(parse_graph(K3));
  CHECK(indexed.size() == 4);
  CHECK(indexed.coefficient({parse_graph(K2), Graph(1)}) == Rational(3));
}

TEST_CASE("contraction coproduct examples") {
  HgrTensor expected;
  expected.add({m({K1}), m({K2})}, 1);
  expected.add({m({K2}), m({K1, K1})}, 1);
  CHECK(contraction_coproduct(x(K2)) == expected);

  HgrTensor triangle;
  triangle.add({m({K1}), m({K3})}, 1);
  triangle.add({m({K2}), m({K1, K2})}, 3);
  triangle.add({m({K3}), m({K1, K1, K1})}, 1);
  CHECK(contraction_coproduct(x(K3)) == triangle);

  for (int n = 0; n <= 4; ++n) {
    const Graph edgeless(n);
    CHECK(contraction_coproduct(edgeless) == HGRTensor::basis({edgeless, edgeless}));
  }
}

TEST_CASE("contraction coproduct is not cocommutative") {
  const HgrTensor d = contraction_coproduct(x(K2));
  HgrTensor swapped;
  for (const auto& [pair, c] : d) {
    swapped.add({pair.second, pair.first}, c);
  }
  CHECK_FALSE(swapped == d);
}

TEST_CASE("counits") {
  CHECK(restriction_counit(Graph(0)) == Rational(1));
  CHECK(restriction_counit(Graph(1)) == Rational(0));
  CHECK(contraction_counit(Graph(3)) == Rational(1));
  CHECK(contraction_counit(parse_graph(K2)) == Rational(0));
  CHECK(contraction_counit(m({K1, K1})) == Rational(1));
  CHECK(contraction_counit(m({K1, K2})) == Rational(0));
  CHECK(restriction_counit(one) == Rational(1));
}

TEST_CASE("antipode examples") {
  const Graph k2 = parse_graph(K2);
  CHECK(antipode_forest(k2) == HgrElement::basis(m({K2}), -1));
  CHECK(antipode_recursive(k2) == HgrElement::basis(m({K2}), -1));

  HgrElement triangle;
  triangle.add(m({K3}), -1);
  triangle.add(m({K2, K2}), 3);
  CHECK(antipode_forest(parse_graph(K3)) == triangle);
  CHECK(antipode_recursive(parse_graph(K3)) == triangle);

  HgrElement path;
  path.add(m({P3}), -1);
  path.add(m({K2, K2}), 2);
  CHECK(antipode_forest(parse_graph(P3)) == path);
  CHECK(antipode_recursive(parse_graph(P3)) == path);

  CHECK_THROWS_AS(antipode_forest(Graph(1)), std::domain_error);
  CHECK_THROWS_AS(antipode_recursive(parse_graph("3: 1-2")), std::domain_error);
}

TEST_CASE("antipode extends multiplicatively and fixes the unit") {
  CHECK(antipode(HgrElement::basis(one)) == HgrElement::basis(one));
  CHECK(antipode(x(K1)) == HgrElement::basis(one));
  CHECK(antipode(x("4: 1-2, 3-4")) == HgrElement::basis(m({K2, K2})));
  const HgrElement sum = x(K2) + x(P3) * Rational(2);
  CHECK(antipode(sum, AntipodeEngine::Forest) == antipode(sum, AntipodeEngine::Recursive));
}

TEST_CASE("forest and recursive antipodes agree up to five vertices") {
  for (int n = 2; n <= 5; ++n) {
    for (const Graph& g : connected_isoclasses(n)) {
      CHECK(antipode_forest(g) == antipode_recursive(g));
    }
  }
}

TEST_CASE("cointeraction on small elements") {
  HgrTensor3 k1;
  k1.add({m({K1}), one, m({K1})}, 1);
  k1.add({one, m({K1}), m({K1})}, 1);
  CHECK(cointeraction_lhs(x(K1)) == k1);
  CHECK(cointeraction_rhs(x(K1)) == k1);
  CHECK(cointeraction_lhs(x(K2)) == cointeraction_rhs(x(K2)));
  CHECK(cointeraction_lhs(x(P3)) == cointeraction_rhs(x(P3)));
}

TEST_CASE("cointeraction fails for indexed graphs") {
  const Graph k1(1);
  // Path 1 - 3 - 2. On the right the extraction keeps the labels of G; on
  // the left the third leg is a concatenation of restrictions.
  {
    const HGRElement path = HGRElement::basis(parse_graph("3: 1-3, 2-3"));
    const HGRTensor3 lhs = cointeraction_lhs(path);
    const HGRTensor3 rhs = cointeraction_rhs(path);
    CHECK_FALSE(lhs == rhs);
    CHECK(rhs.coefficient({k1, k1, parse_graph("3: 1-3")}) == Rational(2));
    CHECK(lhs.coefficient({k1, k1, parse_graph("3: 1-3")}) == Rational(0));
    CHECK(lhs.coefficient({k1, k1, parse_graph("3: 1-2")}) == Rational(2));
    CHECK(rhs.coefficient({k1, k1, parse_graph("3: 1-2")}) == Rational(0));
    CHECK(lhs.coefficient({k1, k1, parse_graph("3: 2-3")}) == Rational(2));
    CHECK(rhs.coefficient({k1, k1, parse_graph("3: 2-3")}) == Rational(2));

    const HgrElement projected = projection(path);
    CHECK(cointeraction_lhs(projected) == cointeraction_rhs(projected));
  }
  // Path 3 - 1 - 2.
  {
    const HGRElement path = HGRElement::basis(parse_graph("3: 1-2, 1-3"));
    const HGRTensor3 lhs = cointeraction_lhs(path);
    const HGRTensor3 rhs = cointeraction_rhs(path);
    CHECK_FALSE(lhs == rhs);
    CHECK(rhs.coefficient({k1, k1, parse_graph("3: 1-3")}) == Rational(2));
    CHECK(lhs.coefficient({k1, k1, parse_graph("3: 1-3")}) == Rational(0));
    CHECK(lhs.coefficient({k1, k1, parse_graph("3: 2-3")}) == Rational(2));
    CHECK(rhs.coefficient({k1, k1, parse_graph("3: 2-3")}) == Rational(0));
    CHECK(lhs.coefficient({k1, k1, parse_graph("3: 1-2")}) == Rational(2));
    CHECK(rhs.coefficient({k1, k1, parse_graph("3: 1-2")}) == Rational(2));
  }
}

TEST_CASE("indexed cointeraction holds on the monotone path") {
  const HGRElement path = HGRElement::basis(parse_graph(P3));
  CHECK(cointeraction_lhs(path) == cointeraction_rhs(path));
}

TEST_CASE("projection and coaction") {
  CHECK(projection(HGRElement::basis(parse_graph("3: 1-3, 3-2"))) == x(P3));
  const Graph g = parse_graph("3: 1-3");
  const Graph h = parse_graph(K2);
  const HGRElement gh = multiply(HGRElement::basis(g), HGRElement::basis(h));
  CHECK(projection(gh) == multiply(projection(HGRElement::basis(g)),
                                   projection(HGRElement::basis(h))));

  LinComb<std::pair<Graph, Monomial>> expected;
  expected.add({Graph(1), m({K2})}, 1);
  expected.add({h, m({K1, K1})}, 1);
  CHECK(coaction(HGRElement::basis(h)) == expected);
}

TEST_CASE("indexed product shifts the right factor") {
  const HGRElement a = HGRElement::basis(parse_graph(K2));
  const HGRElement b = HGRElement::basis(parse_graph("3: 1-3"));
  CHECK(multiply(a, b) == HGRElement::basis(parse_graph("5: 1-2, 3-5")));
}
