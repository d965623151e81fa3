#pragma once

#include <compare>
#include <string>
#include <vector>

#include "chromhopf/graph.hpp"

namespace chromhopf {

/// Isomorphism-class identifier of a connected graph.
///
/// The bytes are the vertex count followed by the packed adjacency bits of a
/// canonical labeling, so the key also decodes back to a representative.
class CanonicalKey {
 public:
  CanonicalKey() = default;

  int order() const;
  const std::string& bytes() const { return bytes_; }
  /// The canonically labeled representative graph.
  Graph representative() const;

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  friend CanonicalKey canonical_key(const Graph& g);
  explicit CanonicalKey(std::string bytes) : bytes_(std::move(bytes)) {}
  std::string bytes_;
};

/// Throws std::domain_error for a disconnected graph.
CanonicalKey canonical_key(const Graph& g);

/// Basis element of the commutative graph algebra: the sorted multiset of
/// the connected components' keys. The empty monomial is the unit 1.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::vector<CanonicalKey> factors);

  const std::vector<CanonicalKey>& factors() const { return factors_; }
  bool is_unit() const { return factors_.empty(); }
  int order() const;
  /// Drop K1 factors; the image in the quotient by <K1 - 1>.
  Monomial without_singletons() const;
  /// Disjoint union of the factor representatives, in factor order.
  Graph graph() const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend auto operator<=>(const Monomial&, const Monomial&) = default;

 private:
  std::vector<CanonicalKey> factors_;
};

Monomial monomial_key(const Graph& g);
bool isomorphic(const Graph& a, const Graph& b);

const CanonicalKey& k1_key();

}  // namespace chromhopf
