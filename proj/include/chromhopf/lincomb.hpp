#pragma once

#include <map>
#include <tuple>
#include <type_traits>
#include <utility>

#include "chromhopf/rational.hpp"

namespace chromhopf {

/// Finite formal linear combination of basis keys with rational coefficients.
///
/// Keys must be totally ordered; iteration follows that order, so every
/// printed combination is deterministic. Zero coefficients are never stored,
/// hence two combinations are equal iff their maps are equal.
template <class Key>
class LinComb {
 public:
  using key_type = Key;
  using map_type = std::map<Key, Rational>;
  using const_iterator = typename map_type::const_iterator;

  LinComb() = default;

  static LinComb basis(Key key, Rational coefficient = Rational(1)) {
    LinComb result;
    result.add(std::move(key), coefficient);
    return result;
  }

  void add(const Key& key, const Rational& coefficient) {
    if (coefficient.is_zero()) {
      return;
    }
    auto [it, inserted] = terms_.try_emplace(key, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) {
        terms_.erase(it);
      }
    }
  }

  Rational coefficient(const Key& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
  }

  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  const_iterator begin() const { return terms_.begin(); }
  const_iterator end() const { return terms_.end(); }
  const map_type& terms() const { return terms_; }

  LinComb& operator+=(const LinComb& rhs) {
    for (const auto& [key, c] : rhs.terms_) {
      add(key, c);
    }
    return *this;
  }

  LinComb& operator-=(const LinComb& rhs) {
    for (const auto& [key, c] : rhs.terms_) {
      add(key, -c);
    }
    return *this;
  }

  LinComb& operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto& [key, c] : terms_) {
      c *= scalar;
    }
    return *this;
  }

  friend LinComb operator+(LinComb lhs, const LinComb& rhs) { return lhs += rhs; }
  friend LinComb operator-(LinComb lhs, const LinComb& rhs) { return lhs -= rhs; }
  friend LinComb operator*(LinComb lhs, const Rational& s) { return lhs *= s; }
  friend LinComb operator*(const Rational& s, LinComb rhs) { return rhs *= s; }
  LinComb operator-() const { return *this * Rational(-1); }

  friend bool operator==(const LinComb& a, const LinComb& b) { return a.terms_ == b.terms_; }

  /// Linear extension of f: Key -> LinComb<Other>.
  template <class F>
  auto apply(F&& f) const {
    using Result = std::decay_t<decltype(f(std::declval<const Key&>()))>;
    Result out;
    for (const auto& [key, c] : terms_) {
      for (const auto& [image, d] : f(key)) {
        out.add(image, c * d);
      }
    }
    return out;
  }

  /// Linear extension of a basis-to-basis map.
  template <class F>
  auto map_keys(F&& f) const {
    using Image = std::decay_t<decltype(f(std::declval<const Key&>()))>;
    LinComb<Image> out;
    for (const auto& [key, c] : terms_) {
      out.add(f(key), c);
    }
    return out;
  }

 private:
  map_type terms_;
};

template <class A, class B>
LinComb<std::pair<A, B>> tensor(const LinComb<A>& a, const LinComb<B>& b) {
  LinComb<std::pair<A, B>> out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      out.add({ka, kb}, ca * cb);
    }
  }
  return out;
}

/// Bilinear extension of a basis-level product. `product(a, b)` may return a
/// single key or a LinComb of keys.
template <class K, class F>
LinComb<K> multiply(const LinComb<K>& a, const LinComb<K>& b, F&& product) {
  LinComb<K> out;
  for (const auto& [ka, ca] : a) {
    for (const auto& [kb, cb] : b) {
      auto image = product(ka, kb);
      if constexpr (std::is_same_v<std::decay_t<decltype(image)>, LinComb<K>>) {
        for (const auto& [key, d] : image) {
          out.add(key, ca * cb * d);
        }
      } else {
        out.add(image, ca * cb);
      }
    }
  }
  return out;
}

/// Componentwise product on pairs: (a1 ⊗ b1)(a2 ⊗ b2) = a1a2 ⊗ b1b2.
template <class A, class B, class FA, class FB>
LinComb<std::pair<A, B>> multiply_tensor(const LinComb<std::pair<A, B>>& x,
                                         const LinComb<std::pair<A, B>>& y, FA&& left_product,
                                         FB&& right_product) {
  LinComb<std::pair<A, B>> out;
  for (const auto& [kx, cx] : x) {
    for (const auto& [ky, cy] : y) {
      out.add({left_product(kx.first, ky.first), right_product(kx.second, ky.second)}, cx * cy);
    }
  }
  return out;
}

/// (f ⊗ Id) on a tensor square, where f: A -> LinComb<pair<C, D>>.
template <class A, class B, class F>
auto apply_first(const LinComb<std::pair<A, B>>& t, F&& f) {
  using Image = typename std::decay_t<decltype(f(std::declval<const A&>()))>::key_type;
  using C = typename Image::first_type;
  using D = typename Image::second_type;
  LinComb<std::tuple<C, D, B>> out;
  for (const auto& [key, c] : t) {
    for (const auto& [image, d] : f(key.first)) {
      out.add({image.first, image.second, key.second}, c * d);
    }
  }
  return out;
}

/// (Id ⊗ f) on a tensor square, where f: B -> LinComb<pair<C, D>>.
template <class A, class B, class F>
auto apply_second(const LinComb<std::pair<A, B>>& t, F&& f) {
  using Image = typename std::decay_t<decltype(f(std::declval<const B&>()))>::key_type;
  using C = typename Image::first_type;
  using D = typename Image::second_type;
  LinComb<std::tuple<A, C, D>> out;
  for (const auto& [key, c] : t) {
    for (const auto& [image, d] : f(key.second)) {
      out.add({key.first, image.first, image.second}, c * d);
    }
  }
  return out;
}

}  // namespace chromhopf
