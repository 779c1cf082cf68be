#pragma once

#include <array>
#include <string>

#include "cpstar/context.hpp"
#include "cpstar/reduce.hpp"
#include "cpstar/sparse_poly.hpp"
#include "cpstar/univar.hpp"

namespace cpstar {

/// prod_{k=0}^{r-1} (D + k(k - n)) as a polynomial in the Laplacian.
UnivarPoly p_poly(int r, int n);

/// k_r(D) = sum_{t=1}^r p_t(D) A^(t)_{r-t} / t!.
UnivarPoly k_poly(int r, int n);

/// (r+1) k_{r+1} - [D k_r - sum_{s=0}^{r-1} r!(r+3+s) / ((s+2)!(r-1-s)!) k_{r-s}], n = 1.
UnivarPoly moreno_recursion_residual(int r);

/// Coefficient of p_s in the expanded recursion; zero for 2 <= s <= r.
Rational coeff_vanishing(int r, int s);

/// A^(s)_{t+1-s} - (A^(s-1)_{t+1-s} - s A^(s)_{t-s}).
Rational a_identity_check(int s, int t);

/// Rational function on the inhomogeneous chart with variables u, ub, v, vb
/// (n of each) over D1 = 1 + u.vb, D2 = 1 + v.ub, D3 = 1 + u.ub, D4 = 1 + v.vb.
class ChartElem {
 public:
  using Exponents = std::array<int, 4>;

  explicit ChartElem(int n);
  ChartElem(int n, SparsePoly numerator, Exponents denominator = {0, 0, 0, 0});

  int n() const { return n_; }
  const SparsePoly& numerator() const { return num_; }
  const Exponents& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  std::size_t u(int k) const { return static_cast<std::size_t>(k); }
  std::size_t ub(int k) const { return static_cast<std::size_t>(n_ + k); }
  std::size_t v(int k) const { return static_cast<std::size_t>(2 * n_ + k); }
  std::size_t vb(int k) const { return static_cast<std::size_t>(3 * n_ + k); }
  /// D_{i+1} as a polynomial.
  SparsePoly factor(int i) const;

  ChartElem& operator+=(const ChartElem& o);
  ChartElem& operator-=(const ChartElem& o);
  friend ChartElem operator+(ChartElem a, const ChartElem& b) { return a += b; }
  friend ChartElem operator-(ChartElem a, const ChartElem& b) { return a -= b; }
  friend ChartElem operator*(const ChartElem& a, const ChartElem& b);
  friend ChartElem operator*(ChartElem a, const Complex& c);

  ChartElem diff(std::size_t var) const;
  /// u -> v, ub -> vb; every factor becomes D4.
  ChartElem diagonal() const;
  /// D3 sum_{k,l} (u^k ub^l + delta^{kl}) d/du^k d/dub^l.
  ChartElem laplacian() const;
  /// Equality of the two fractions by cross-multiplication of numerators.
  bool equals(const ChartElem& o) const;
  std::string str() const;

 private:
  /// Numerator over the denominator with exponents `target` (>= den_).
  SparsePoly lifted(const Exponents& target) const;

  int n_;
  SparsePoly num_;
  Exponents den_{0, 0, 0, 0};
};

/// Chart image (z0 = 1, z^k = v^k, x -> D4) of a Euclidean reduced function.
ChartElem to_chart(const ReducedFn& f);
/// phi(u, vb) and psi(v, ub): the holomorphic / antiholomorphic continuations.
ChartElem continue_left(const ReducedFn& f);
ChartElem continue_right(const ReducedFn& f);

/// Diagonal of prod_{k<r} (Lap + k(k-n)) applied to phi(u, vb) psi(v, ub),
/// minus the chart image of M~_r(phi, psi).
ChartElem chart_cross_check(const ReducedFn& phi, const ReducedFn& psi, int r);

}  // namespace cpstar
