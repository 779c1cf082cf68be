#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cpstar/scalar.hpp"
#include "cpstar/series.hpp"

namespace cpstar {

/// Which formal variable a univariate polynomial is written in.
enum class UVar { x, alpha, delta };

/// Dense univariate polynomial; never stores zeros above its degree.
class UnivarPoly {
 public:
  UnivarPoly() = default;
  explicit UnivarPoly(UVar var) : var_(var) {}
  UnivarPoly(UVar var, std::vector<Complex> coeffs);

  static UnivarPoly constant(UVar var, const Complex& c) { return {var, {c}}; }
  static UnivarPoly monomial(UVar var, unsigned degree, const Complex& c = Complex(1));

  UVar var() const { return var_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Complex operator[](std::size_t k) const { return k < c_.size() ? c_[k] : Complex(); }
  const std::vector<Complex>& coeffs() const { return c_; }

  UnivarPoly& operator+=(const UnivarPoly& o);
  UnivarPoly& operator-=(const UnivarPoly& o);
  UnivarPoly& operator*=(const Complex& s);
  UnivarPoly operator-() const;
  friend UnivarPoly operator+(UnivarPoly a, const UnivarPoly& b) { return a += b; }
  friend UnivarPoly operator-(UnivarPoly a, const UnivarPoly& b) { return a -= b; }
  friend UnivarPoly operator*(UnivarPoly a, const Complex& s) { return a *= s; }
  friend UnivarPoly operator*(const Complex& s, UnivarPoly a) { return a *= s; }
  friend UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b);
  UnivarPoly& operator*=(const UnivarPoly& o) { return *this = *this * o; }
  friend bool operator==(const UnivarPoly& a, const UnivarPoly& b) {
    return a.var_ == b.var_ && a.c_ == b.c_;
  }

  /// r-th derivative.
  UnivarPoly derivative(unsigned r = 1) const;
  /// Drops every term of degree > max_degree.
  UnivarPoly truncated_degree(int max_degree) const;
  Complex eval(const Complex& at) const;

  std::string str() const;
  std::string latex() const;

 private:
  void trim();
  void check(const UnivarPoly& o) const;

  UVar var_ = UVar::x;
  std::vector<Complex> c_;
};

template <>
struct CarrierTraits<UnivarPoly> {
  static UnivarPoly zero_like(const UnivarPoly& p) { return UnivarPoly(p.var()); }
  static UnivarPoly one_like(const UnivarPoly& p) { return UnivarPoly::constant(p.var(), 1); }
  static bool is_zero(const UnivarPoly& p) { return p.is_zero(); }
  static std::optional<UnivarPoly> inverse(const UnivarPoly& p) {
    if (p.degree() != 0) return std::nullopt;
    return UnivarPoly::constant(p.var(), p[0].inverse());
  }
};

}  // namespace cpstar
