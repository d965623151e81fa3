#include "chromhopf/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace chromhopf {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coeffs_(std::move(coefficients)) {
  trim();
}

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::x() { return Polynomial({Rational(0), Rational(1)}); }

Polynomial Polynomial::monomial(const Rational& c, int degree) {
  if (degree < 0) {
    throw std::domain_error("negative monomial degree");
  }
  std::vector<Rational> coeffs(static_cast<std::size_t>(degree) + 1);
  coeffs.back() = c;
  return Polynomial(std::move(coeffs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) {
    coeffs_.pop_back();
  }
}

Rational Polynomial::coefficient(int i) const {
  if (i < 0 || i >= static_cast<int>(coeffs_.size())) {
    return Rational(0);
  }
  return coeffs_[static_cast<std::size_t>(i)];
}

Rational Polynomial::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * at + *it;
  }
  return acc;
}

Polynomial Polynomial::derivative() const {
  if (coeffs_.size() <= 1) {
    return Polynomial();
  }
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  }
  return Polynomial(std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] += rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) {
    coeffs_.resize(rhs.coeffs_.size());
  }
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) {
    coeffs_[i] -= rhs.coeffs_[i];
  }
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) {
      continue;
    }
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] += coeffs_[i] * rhs.coeffs_[j];
    }
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

Polynomial& Polynomial::operator*=(const Rational& scalar) {
  for (auto& c : coeffs_) {
    c *= scalar;
  }
  trim();
  return *this;
}

std::string Polynomial::pretty() const {
  if (is_zero()) {
    return "0";
  }
  std::string out;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) {
      continue;
    }
    const bool first = out.empty();
    if (c.sign() < 0) {
      out += first ? "-" : " - ";
    } else if (!first) {
      out += " + ";
    }
    const Rational mag = c.abs();
    const bool unit = mag == Rational(1);
    if (i == 0 || !unit) {
      const bool fraction = !mag.is_integer();
      if (fraction && i > 0) {
        out += "(" + mag.str() + ")";
      } else {
        out += mag.str();
      }
    }
    if (i >= 1) {
      out += "X";
    }
    if (i >= 2) {
      out += "^" + std::to_string(i);
    }
  }
  return out;
}

std::vector<std::string> Polynomial::to_strings() const {
  std::vector<std::string> out;
  out.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    out.push_back(c.str());
  }
  return out;
}

Polynomial Polynomial::from_strings(const std::vector<std::string>& coefficients) {
  std::vector<Rational> coeffs;
  coeffs.reserve(coefficients.size());
  for (const auto& s : coefficients) {
    coeffs.push_back(Rational::parse(s));
  }
  return Polynomial(std::move(coeffs));
}

Bivariate::Bivariate(int x_degree, int y_degree)
    : coeffs_(static_cast<std::size_t>(std::max(x_degree, -1) + 1),
              std::vector<Rational>(static_cast<std::size_t>(std::max(y_degree, -1) + 1))) {}

Rational Bivariate::eval(const Rational& x, const Rational& y) const {
  Rational acc(0);
  Rational xi(1);
  for (const auto& row : coeffs_) {
    Rational yj(1);
    for (const auto& c : row) {
      acc += c * xi * yj;
      yj *= y;
    }
    xi *= x;
  }
  return acc;
}

namespace {

Rational binomial(int n, int k) { return factorial(n) / (factorial(k) * factorial(n - k)); }

}  // namespace

Bivariate compose_sum(const Polynomial& p) {
  const int d = p.degree();
  Bivariate out(d, d);
  for (int n = 0; n <= d; ++n) {
    const Rational& a = p.coefficient(n);
    if (a.is_zero()) {
      continue;
    }
    for (int i = 0; i <= n; ++i) {
      out.at(i, n - i) += a * binomial(n, i);
    }
  }
  return out;
}

Bivariate compose_product(const Polynomial& p) {
  const int d = p.degree();
  Bivariate out(d, d);
  for (int n = 0; n <= d; ++n) {
    out.at(n, n) = p.coefficient(n);
  }
  return out;
}

Polynomial falling_factorial(int k) {
  if (k < 0) {
    throw std::domain_error("falling factorial of negative order");
  }
  Polynomial out = Polynomial::constant(Rational(1));
  for (int i = 0; i < k; ++i) {
    out *= Polynomial({Rational(-i), Rational(1)});
  }
  return out;
}

Polynomial hilbert(int k) { return falling_factorial(k) * (Rational(1) / factorial(k)); }

}  // namespace chromhopf
