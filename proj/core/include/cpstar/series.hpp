#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cpstar/poly.hpp"
#include "cpstar/scalar.hpp"
#include "cpstar/sparse_poly.hpp"

namespace cpstar {

/// What Series<T> needs from its coefficient algebra beyond + - *.
template <class T>
struct CarrierTraits;

template <>
struct CarrierTraits<Complex> {
  static Complex zero_like(const Complex&) { return {}; }
  static Complex one_like(const Complex&) { return Complex(1); }
  static bool is_zero(const Complex& c) { return c.is_zero(); }
  static std::optional<Complex> inverse(const Complex& c) {
    if (c.is_zero()) return std::nullopt;
    return c.inverse();
  }
};

template <>
struct CarrierTraits<LaurentElem> {
  static LaurentElem zero_like(const LaurentElem& e) { return LaurentElem(e.space()); }
  static LaurentElem one_like(const LaurentElem& e) { return {e.space(), Complex(1)}; }
  static bool is_zero(const LaurentElem& e) { return e.is_zero(); }
  static std::optional<LaurentElem> inverse(const LaurentElem& e) {
    if (!e.is_unit()) return std::nullopt;
    return e.inverse();
  }
};

/// Laurent polynomials in anonymous variables: the units are the monomials.
template <>
struct CarrierTraits<SparsePoly> {
  static SparsePoly zero_like(const SparsePoly& p) { return SparsePoly(p.nvars()); }
  static SparsePoly one_like(const SparsePoly& p) { return {p.nvars(), Complex(1)}; }
  static bool is_zero(const SparsePoly& p) { return p.is_zero(); }
  static std::optional<SparsePoly> inverse(const SparsePoly& p) {
    if (p.size() != 1) return std::nullopt;
    const auto& [m, c] = *p.terms().begin();
    Monomial inv;
    for (std::size_t v = 0; v < p.nvars(); ++v) inv[v] = static_cast<Monomial::Exp>(-m[v]);
    return SparsePoly::monomial(p.nvars(), inv, c.inverse());
  }
};

/// Truncated formal power series c_0 + c_1 l + ... + c_K l^K in the
/// deformation parameter. The order K is explicit; trailing zeros are kept.
/// Mixed-order arithmetic truncates to the smaller order.
template <class T>
class Series {
 public:
  using Traits = CarrierTraits<T>;

  Series(int order, const T& zero) : c_(check_order(order) + 1, Traits::zero_like(zero)) {}
  explicit Series(std::vector<T> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw std::invalid_argument("series needs at least one coefficient");
  }

  /// c * l^k truncated at `order`.
  static Series monomial(int order, int k, const T& c) {
    Series s(order, c);
    if (k <= order) s.c_[static_cast<std::size_t>(k)] = c;
    return s;
  }
  static Series constant(int order, const T& c) { return monomial(order, 0, c); }

  int order() const { return static_cast<int>(c_.size()) - 1; }
  const T& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }
  T& operator[](int k) { return c_.at(static_cast<std::size_t>(k)); }
  const std::vector<T>& coeffs() const { return c_; }
  T zero() const { return Traits::zero_like(c_.front()); }

  bool is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](const T& c) { return Traits::is_zero(c); });
  }

  Series truncated(int order) const {
    if (order >= this->order()) return *this;
    return Series(std::vector<T>(c_.begin(), c_.begin() + check_order(order) + 1));
  }

  Series& operator+=(const Series& o) {
    shrink_to(o.order());
    for (int k = 0; k <= order(); ++k) c_[static_cast<std::size_t>(k)] += o[k];
    return *this;
  }
  Series& operator-=(const Series& o) {
    shrink_to(o.order());
    for (int k = 0; k <= order(); ++k) c_[static_cast<std::size_t>(k)] -= o[k];
    return *this;
  }
  Series operator-() const {
    Series r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  Series& operator*=(const Complex& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Complex& s) { return a *= s; }
  friend Series operator*(const Complex& s, Series a) { return a *= s; }

  /// Cauchy product, truncated at the smaller order.
  friend Series operator*(const Series& a, const Series& b) {
    int K = std::min(a.order(), b.order());
    Series r(K, a.zero());
    for (int i = 0; i <= K; ++i) {
      if (Traits::is_zero(a[i])) continue;
      for (int j = 0; i + j <= K; ++j) {
        if (Traits::is_zero(b[j])) continue;
        r[i + j] += a[i] * b[j];
      }
    }
    return r;
  }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  /// Multiplies every coefficient by the same carrier element.
  Series scaled(const T& t) const {
    Series r = *this;
    for (auto& c : r.c_) c = c * t;
    return r;
  }

  /// Multiplication by l^k (coefficients pushed past the order are dropped).
  Series shifted(int k) const {
    Series r(order(), zero());
    for (int i = 0; i + k <= order(); ++i) r[i + k] = c_[static_cast<std::size_t>(i)];
    return r;
  }

  friend bool operator==(const Series& a, const Series& b) { return a.c_ == b.c_; }

 private:
  static int check_order(int order) {
    if (order < 0) throw std::invalid_argument("series order must be non-negative");
    return order;
  }
  void shrink_to(int order) {
    if (order < this->order()) c_.resize(static_cast<std::size_t>(order) + 1);
  }

  std::vector<T> c_;
};

/// b with a*b = 1 + O(l^(K+1)); requires an invertible constant coefficient.
template <class T>
Series<T> invert(const Series<T>& a) {
  auto inv0 = CarrierTraits<T>::inverse(a[0]);
  if (!inv0) throw MathError("series constant term is not invertible");
  Series<T> b(a.order(), a.zero());
  b[0] = *inv0;
  for (int k = 1; k <= a.order(); ++k) {
    T acc = a.zero();
    for (int j = 1; j <= k; ++j)
      if (!CarrierTraits<T>::is_zero(a[j])) acc += a[j] * b[k - j];
    b[k] = -(acc * *inv0);
  }
  return b;
}

template <class T>
Series<T> pow(const Series<T>& a, unsigned e) {
  Series<T> result = Series<T>::constant(a.order(), CarrierTraits<T>::one_like(a[0]));
  Series<T> base = a;
  while (e > 0) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e > 0) base *= base;
  }
  return result;
}

/// Formal composition a(u(l)); u must have zero constant term.
template <class T>
Series<T> reparametrize(const Series<T>& a, const Series<Complex>& u) {
  if (!u[0].is_zero()) throw MathError("substituted series must have zero constant term");
  int K = std::min(a.order(), u.order());
  Series<T> r(K, a.zero());
  Series<Complex> upow = Series<Complex>::constant(K, Complex(1));
  for (int j = 0; j <= K; ++j) {
    if (j > 0) upow = (upow * u).truncated(K);
    if (CarrierTraits<T>::is_zero(a[j])) continue;
    for (int k = j; k <= K; ++k)
      if (!upow[k].is_zero()) r[k] += a[j] * upow[k];
  }
  return r;
}

/// sum_{j<=K} a^j / j!; requires zero constant term.
template <class T>
Series<T> exp_truncated(const Series<T>& a) {
  if (!CarrierTraits<T>::is_zero(a[0]))
    throw MathError("formal exponential needs a zero constant term");
  Series<T> one = Series<T>::constant(a.order(), CarrierTraits<T>::one_like(a[0]));
  Series<T> result = one, term = one;
  for (int j = 1; j <= a.order(); ++j) {
    term = term * a * Complex(Rational(1, j));
    result += term;
  }
  return result;
}

}  // namespace cpstar
