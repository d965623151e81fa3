#pragma once

#include <string>
#include <vector>

#include "chromhopf/rational.hpp"

namespace chromhopf {

/// Dense univariate polynomial over the rationals, coefficient i of X^i.
/// The coefficient vector never ends with a zero.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  static Polynomial constant(const Rational& c);
  static Polynomial x();
  static Polynomial monomial(const Rational& c, int degree);

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  Rational coefficient(int i) const;
  const std::vector<Rational>& coefficients() const { return coeffs_; }

  Rational eval(const Rational& at) const;
  Polynomial derivative() const;

  Polynomial& operator+=(const Polynomial& rhs);
  Polynomial& operator-=(const Polynomial& rhs);
  Polynomial& operator*=(const Polynomial& rhs);
  Polynomial& operator*=(const Rational& scalar);

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(Polynomial a, const Polynomial& b) { return a *= b; }
  friend Polynomial operator*(Polynomial a, const Rational& s) { return a *= s; }
  friend Polynomial operator*(const Rational& s, Polynomial a) { return a *= s; }
  Polynomial operator-() const { return *this * Rational(-1); }

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Human form such as "X^3 - 3X^2 + 2X".
  std::string pretty() const;
  /// Coefficients as serialized rationals, index = degree.
  std::vector<std::string> to_strings() const;
  static Polynomial from_strings(const std::vector<std::string>& coefficients);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Polynomial in X and Y stored as coefficient matrix: at(i, j) multiplies X^i Y^j.
class Bivariate {
 public:
  Bivariate(int x_degree, int y_degree);

  Rational& at(int i, int j) { return coeffs_[i][j]; }
  const Rational& at(int i, int j) const { return coeffs_[i][j]; }
  int x_degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  int y_degree() const { return coeffs_.empty() ? -1 : static_cast<int>(coeffs_[0].size()) - 1; }
  Rational eval(const Rational& x, const Rational& y) const;

  friend bool operator==(const Bivariate&, const Bivariate&) = default;

 private:
  std::vector<std::vector<Rational>> coeffs_;
};

/// Coefficients of P(X + Y); this is the coproduct X -> X⊗1 + 1⊗X.
Bivariate compose_sum(const Polynomial& p);
/// Coefficients of P(XY); this is the coproduct X -> X⊗X.
Bivariate compose_product(const Polynomial& p);

/// X(X-1)...(X-k+1).
Polynomial falling_factorial(int k);
/// X(X-1)...(X-k+1)/k!, the k-th Hilbert polynomial.
Polynomial hilbert(int k);

}  // namespace chromhopf
