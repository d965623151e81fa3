#include "chromhopf/verify.hpp"

#include <functional>
#include <map>
#include <stdexcept>

#include "chromhopf/bialgebra.hpp"
#include "chromhopf/characters.hpp"
#include "chromhopf/chromatic.hpp"
#include "chromhopf/graph_enum.hpp"
#include "chromhopf/lattice.hpp"
#include "chromhopf/orientation.hpp"
#include "chromhopf/wsym.hpp"

namespace chromhopf {

namespace {

class Checker {
 public:
  explicit Checker(SuiteResult& result) : result_(result) {}

  // Records the first failure only; later checks still count.
  void expect(const Graph& g, bool condition, const std::string& what) {
    ++result_.checked;
    if (!condition && result_.ok) {
      result_.ok = false;
      result_.counterexample = format_graph(g);
      result_.detail = what;
    }
  }

  bool failed() const { return !result_.ok; }

 private:
  SuiteResult& result_;
};

std::vector<Graph> all_isoclasses(int max_n) {
  std::vector<Graph> out;
  for (int n = 0; n <= max_n; ++n) {
    for (Graph& g : graph_isoclasses(n)) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

std::vector<Graph> connected_up_to(int min_n, int max_n) {
  std::vector<Graph> out;
  for (int n = min_n; n <= max_n; ++n) {
    for (Graph& g : connected_isoclasses(n)) {
      out.push_back(std::move(g));
    }
  }
  return out;
}

int monomial_degree(const Monomial& m) {
  return m.order() - static_cast<int>(m.factors().size());
}

template <class Coproduct>
bool coassociative(const HgrElement& x, Coproduct&& cop) {
  const HgrTensor once = cop(x);
  auto f = [&](const Monomial& m) { return cop(HgrElement::basis(m)); };
  return apply_first(once, f) == apply_second(once, f);
}

template <class Coproduct>
bool coassociative(const HGRElement& x, Coproduct&& cop) {
  const HGRTensor once = cop(x);
  auto f = [&](const Graph& g) { return cop(HGRElement::basis(g)); };
  return apply_first(once, f) == apply_second(once, f);
}

void coassoc_suite(Checker& c, int max_n) {
  const auto graphs = all_isoclasses(max_n);
  auto delta = [](const auto& x) { return restriction_coproduct(x); };
  auto small = [](const auto& x) { return contraction_coproduct(x); };
  for (const Graph& g : graphs) {
    const HgrElement x = isoclass(g);
    c.expect(g, coassociative(x, delta), "restriction coproduct is not coassociative");
    c.expect(g, coassociative(x, small), "contraction coproduct is not coassociative");
    const HGRElement y = HGRElement::basis(g);
    c.expect(g, coassociative(y, delta), "indexed restriction coproduct is not coassociative");
    c.expect(g, coassociative(y, small), "indexed contraction coproduct is not coassociative");

    const HgrTensor d = restriction_coproduct(x);
    HgrTensor swapped;
    bool graded = true;
    for (const auto& [pair, coef] : d) {
      swapped.add({pair.second, pair.first}, coef);
      graded = graded && pair.first.order() + pair.second.order() == g.order();
    }
    c.expect(g, swapped == d, "restriction coproduct is not cocommutative");
    c.expect(g, graded, "restriction coproduct does not split the order");
    bool homogeneous = true;
    for (const auto& [pair, coef] : contraction_coproduct(x)) {
      homogeneous = homogeneous &&
                    monomial_degree(pair.first) + monomial_degree(pair.second) == degree(g);
    }
    c.expect(g, homogeneous, "contraction coproduct does not split the degree");
  }
  // Multiplicativity on pairs whose product stays within the size bound.
  for (const Graph& g : graphs) {
    for (const Graph& h : graphs) {
      if (g.order() + h.order() > max_n || g.order() == 0 || h.order() == 0) {
        continue;
      }
      const HgrElement x = isoclass(g);
      const HgrElement y = isoclass(h);
      const HgrElement xy = multiply(x, y);
      auto mono = [](const Monomial& a, const Monomial& b) { return a * b; };
      const Graph gh = disjoint_union(g, h);
      c.expect(gh,
               restriction_coproduct(xy) == multiply_tensor(restriction_coproduct(x),
                                                            restriction_coproduct(y), mono, mono),
               "restriction coproduct is not multiplicative");
      c.expect(gh,
               contraction_coproduct(xy) == multiply_tensor(contraction_coproduct(x),
                                                            contraction_coproduct(y), mono, mono),
               "contraction coproduct is not multiplicative");
    }
  }
}

void counit_suite(Checker& c, int max_n) {
  for (const Graph& g : all_isoclasses(max_n)) {
    const HgrElement x = isoclass(g);
    HgrElement left, right;
    for (const auto& [pair, coef] : restriction_coproduct(x)) {
      left.add(pair.second, coef * restriction_counit(pair.first));
      right.add(pair.first, coef * restriction_counit(pair.second));
    }
    c.expect(g, left == x && right == x, "restriction counit law fails");
    left = HgrElement();
    right = HgrElement();
    for (const auto& [pair, coef] : contraction_coproduct(x)) {
      left.add(pair.second, coef * contraction_counit(pair.first));
      right.add(pair.first, coef * contraction_counit(pair.second));
    }
    c.expect(g, left == x && right == x, "contraction counit law fails");

    HGRElement ileft, iright;
    const HGRElement y = HGRElement::basis(g);
    for (const auto& [pair, coef] : contraction_coproduct(y)) {
      ileft.add(pair.second, coef * contraction_counit(pair.first));
      iright.add(pair.first, coef * contraction_counit(pair.second));
    }
    c.expect(g, ileft == y && iright == y, "indexed contraction counit law fails");
  }
}

void cointeraction_suite(Checker& c, int max_n) {
  for (const Graph& g : all_isoclasses(max_n)) {
    const HgrElement x = isoclass(g);
    c.expect(g, cointeraction_lhs(x) == cointeraction_rhs(x), "cointeraction identity fails");
  }
}

void antipode_suite(Checker& c, int max_n) {
  for (const Graph& g : connected_up_to(2, max_n)) {
    c.expect(g, antipode_forest(g) == antipode_recursive(g),
             "forest and recursive antipodes differ");
    HgrElement law;
    for (const auto& [pair, coef] : contraction_coproduct(isoclass(g))) {
      law += multiply(antipode(HgrElement::basis(pair.first)),
                      HgrElement::basis(pair.second.without_singletons())) *
             coef;
    }
    c.expect(g, law.is_zero(), "m(S'⊗Id)δ(G) is not ε'(G)1");
  }
}

void engines_suite(Checker& c, int max_n) {
  const Character by_derivative = chromatic_character(ChromaticEngine::Derivative);
  const Character by_forest = chromatic_character(ChromaticEngine::Forest);
  const Character by_recursion = chromatic_character(ChromaticEngine::DeletionContraction);
  for (const Graph& g : all_isoclasses(max_n)) {
    const Polynomial p = pchr_partition(g);
    c.expect(g, p == pchr_deletion_contraction(g), "partition and deletion-contraction differ");
    c.expect(g, p == pchr_character_formula(g), "partition and character formula differ");
    for (int k = 0; k <= 4; ++k) {
      c.expect(g, p.eval(Rational(k)) == Rational(static_cast<long>(count_valid_colorings(g, k))),
               "polynomial value differs from the coloring count at k=" + std::to_string(k));
    }
    if (g.order() > 0 && is_connected(g)) {
      const Rational v = by_recursion(g);
      c.expect(g, v == by_derivative(g) && v == by_forest(g), "chromatic character engines differ");
    }
  }
}

void signs_suite(Checker& c, int max_n) {
  const Character chr = chromatic_character();
  for (const Graph& g : all_isoclasses(max_n)) {
    const Polynomial p = pchr_deletion_contraction(g);
    const int n = g.order();
    const int cc = component_count(g);
    bool support = true;
    for (int i = 0; i <= n; ++i) {
      const Rational a = p.coefficient(i);
      if (i < cc) {
        support = support && a.is_zero();
      } else {
        support = support && a.sign() == ((n - i) % 2 == 0 ? 1 : -1);
      }
    }
    c.expect(g, support && p.degree() == n, "coefficient support or sign alternation fails");
    if (n > 0) {
      c.expect(g, -p.coefficient(n - 1) == Rational(static_cast<long>(g.edge_count())),
               "-a_{n-1} is not the edge count");
    }
    c.expect(g, p.eval(Rational(1)) == contraction_counit(g), "P(1) differs from ε'");
    const Rational v = chr(g);
    const Rational signed_v = degree(g) % 2 == 0 ? v : -v;
    c.expect(g, signed_v >= Rational(1), "λ_chr has the wrong sign");
    c.expect(g, (v.abs() == Rational(1)) == is_forest(g), "|λ_chr| = 1 does not match forests");
  }
}

void stanley_suite(Checker& c, int max_n) {
  for (const Graph& g : all_isoclasses(max_n)) {
    const Polynomial p = pchr_deletion_contraction(g);
    for (int k = 1; k <= 3; ++k) {
      Rational expected = p.eval(Rational(-k));
      if (g.order() % 2 != 0) {
        expected = -expected;
      }
      const auto families = Rational(static_cast<long>(stanley_families(g, k)));
      const auto pairs = Rational(static_cast<long>(stanley_pairs(g, k)));
      c.expect(g, families == expected && pairs == expected,
               "negative-value count differs at k=" + std::to_string(k));
    }
    c.expect(g,
             Rational(static_cast<long>(count_acyclic_orientations(g))) ==
                 (g.order() % 2 == 0 ? p.eval(Rational(-1)) : -p.eval(Rational(-1))),
             "acyclic orientation count differs from (-1)^n P(-1)");
  }
}

void mobius_suite(Checker& c, int max_n) {
  const Character chr = chromatic_character();
  for (const Graph& g : connected_up_to(1, max_n)) {
    const AdmissibleLattice lattice(g);
    for (std::size_t a = 0; a < lattice.size(); ++a) {
      for (std::size_t b = 0; b < lattice.size(); ++b) {
        if (!lattice.leq(a, b)) {
          continue;
        }
        const Graph q = interval_quotient(g, lattice.element(a), lattice.element(b));
        c.expect(g, lattice.mobius(a, b) == chr(q),
                 "μ" + lattice.element(a).str() + lattice.element(b).str() +
                     " differs from λ_chr of the interval quotient");
      }
    }
  }
}

void wsym_suite(Checker& c, int max_n) {
  const GraphMorphism<WordElement> acted =
      act(phi0_nc_morphism(), chromatic_character());
  for (const Graph& g : all_isoclasses(max_n)) {
    const WSymElement p = nc_chromatic(g);
    const WordElement words = expand(p);
    c.expect(g, words == nc_chromatic_words(g), "W expansion differs from the coloring words");
    c.expect(g, acted(g) == words, "Φ0 ← λ_chr differs from the noncommutative chromatic sum");
    WSymTensor image;
    for (const auto& [pair, coef] : restriction_coproduct(g)) {
      image += tensor(nc_chromatic(pair.first), nc_chromatic(pair.second)) * coef;
    }
    c.expect(g, wsym_coproduct(p) == image, "noncommutative chromatic map is not comultiplicative");
  }
}

void projection_suite(Checker& c, int max_n) {
  for (const Graph& g : all_isoclasses(max_n)) {
    c.expect(g, hilbert_projection(nc_chromatic(g)) == pchr_deletion_contraction(g),
             "H of the noncommutative chromatic sum differs from P_chr");
    c.expect(g, hilbert_projection(phi0_nc(g)) == phi_zero(g), "H(Φ0(G)) is not X^|G|");
    const HGRElement y = HGRElement::basis(g);
    auto to_class = [](const std::pair<Graph, Graph>& pr) {
      return std::pair{monomial_key(pr.first), monomial_key(pr.second)};
    };
    const HgrElement x = projection(y);
    c.expect(g, restriction_coproduct(y).map_keys(to_class) == restriction_coproduct(x),
             "projection does not commute with the restriction coproduct");
    c.expect(g, contraction_coproduct(y).map_keys(to_class) == contraction_coproduct(x),
             "projection does not commute with the contraction coproduct");
  }
}

using Suite = std::function<void(Checker&, int)>;

const std::map<std::string, Suite>& suites() {
  static const std::map<std::string, Suite> table{
      {"coassoc", coassoc_suite},   {"counit", counit_suite},   {"cointeraction", cointeraction_suite},
      {"antipode", antipode_suite}, {"engines", engines_suite}, {"signs", signs_suite},
      {"stanley", stanley_suite},   {"mobius", mobius_suite},   {"wsym", wsym_suite},
      {"projection", projection_suite},
  };
  return table;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"coassoc", "counit",  "cointeraction", "antipode",
                                              "engines", "signs",   "stanley",       "mobius",
                                              "wsym",    "projection"};
  return names;
}

SuiteResult run_suite(const std::string& name, int max_n) {
  const auto it = suites().find(name);
  if (it == suites().end()) {
    throw std::invalid_argument("unknown suite '" + name + "'");
  }
  SuiteResult result;
  result.name = name;
  Checker checker(result);
  it->second(checker, max_n);
  return result;
}

}  // namespace chromhopf
