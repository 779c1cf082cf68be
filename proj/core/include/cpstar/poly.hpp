#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cpstar/scalar.hpp"
#include "cpstar/sparse_poly.hpp"

namespace cpstar {

/// Variables z^0..z^n, zb^0..zb^n (and w, wb for the two-point space) with a
/// diagonal metric of signs g_k. The distinguished quadratic of a block is
/// x = sum_k g_k z^k zb^k (written y for indefinite metrics).
class VarSpace {
 public:
  VarSpace() = default;
  /// `negative_mask` has bit k set iff g_k = -1.
  VarSpace(int n, std::uint32_t negative_mask, bool two_point = false);

  static VarSpace euclidean(int n, bool two_point = false) { return {n, 0u, two_point}; }
  /// diag(-1, 1, ..., 1): the SU(1,n) signature.
  static VarSpace indefinite(int n, bool two_point = false) { return {n, 1u, two_point}; }
  static VarSpace from_signs(std::span<const int> signs, bool two_point = false);

  int n() const { return n_; }
  int dim() const { return n_ + 1; }
  bool two_point() const { return two_point_; }
  int blocks() const { return two_point_ ? 2 : 1; }
  std::size_t nvars() const { return static_cast<std::size_t>(blocks() * 2 * dim()); }
  int g(int k) const { return (mask_ >> k) & 1u ? -1 : 1; }
  bool is_euclidean() const { return mask_ == 0; }
  std::uint32_t negative_mask() const { return mask_; }

  VarSpace single() const { return {n_, mask_, false}; }
  VarSpace doubled() const { return {n_, mask_, true}; }

  std::size_t z(int k, int block = 0) const { return static_cast<std::size_t>(block * 2 * dim() + k); }
  std::size_t zb(int k, int block = 0) const {
    return static_cast<std::size_t>(block * 2 * dim() + dim() + k);
  }
  /// Name of variable v: z0, zb1, w0, wb1, ...
  std::string var_name(std::size_t v) const;

  /// The quadratic x of the given block as a plain polynomial.
  SparsePoly x_poly(int block = 0) const;

  friend bool operator==(const VarSpace&, const VarSpace&) = default;

 private:
  int n_ = 1;
  std::uint32_t mask_ = 0;
  bool two_point_ = false;
};

/// Returns q with p = x*q when the block quadratic x divides p.
std::optional<SparsePoly> divide_by_x(const SparsePoly& p, const VarSpace& space, int block = 0);

enum class EulerOp { E, Ebar, Y, Hfull };

/// numerator * x^(-xpow[0]) [* x_w^(-xpow[1])], kept canonical: the numerator
/// is divisible by no block quadratic, and zero carries xpow = 0.
class LaurentElem {
 public:
  LaurentElem() = default;
  explicit LaurentElem(const VarSpace& space);
  LaurentElem(const VarSpace& space, const Complex& c);
  LaurentElem(const VarSpace& space, SparsePoly numerator, int xpow = 0, int wpow = 0);

  static LaurentElem z(const VarSpace& s, int k, int block = 0);
  static LaurentElem zb(const VarSpace& s, int k, int block = 0);
  /// x^power of the given block.
  static LaurentElem x(const VarSpace& s, int power = 1, int block = 0);

  const VarSpace& space() const { return space_; }
  const SparsePoly& numerator() const { return num_; }
  int xpow(int block = 0) const { return xpow_[static_cast<std::size_t>(block)]; }

  bool is_zero() const { return num_.is_zero(); }
  /// Units of the Laurent class: nonzero constant times powers of the quadratics.
  bool is_unit() const { return !num_.is_zero() && num_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && xpow_[0] == 0 && xpow_[1] == 0; }
  LaurentElem inverse() const;

  LaurentElem& operator+=(const LaurentElem& o);
  LaurentElem& operator-=(const LaurentElem& o);
  LaurentElem& operator*=(const LaurentElem& o);
  LaurentElem& operator*=(const Complex& c);
  LaurentElem operator-() const;
  friend LaurentElem operator+(LaurentElem a, const LaurentElem& b) { return a += b; }
  friend LaurentElem operator-(LaurentElem a, const LaurentElem& b) { return a -= b; }
  friend LaurentElem operator*(LaurentElem a, const LaurentElem& b) { return a *= b; }
  friend LaurentElem operator*(LaurentElem a, const Complex& c) { return a *= c; }
  friend LaurentElem operator*(const Complex& c, LaurentElem a) { return a *= c; }
  friend bool operator==(const LaurentElem& a, const LaurentElem& b) {
    return a.space_ == b.space_ && a.xpow_ == b.xpow_ && a.num_ == b.num_;
  }
  LaurentElem pow(int e) const;

  /// Multiplies by x^k of the block without touching the numerator.
  LaurentElem times_xpow(int k, int block = 0) const;

  /// Equality test by cross-multiplication of numerators.
  bool equals_by_cross_multiplication(const LaurentElem& o) const;

  LaurentElem diff(std::size_t var) const;

  /// (a, b): holomorphic and antiholomorphic degree of the block when every
  /// term agrees; absent otherwise.
  std::optional<std::pair<int, int>> bidegree(int block = 0) const;
  bool is_homogeneous() const;
  /// Every term has equal holomorphic and antiholomorphic degree (Y F = 0).
  bool is_u1_invariant() const;

  LaurentElem euler(EulerOp op) const;

  /// Swaps z <-> zb (w <-> wb) and conjugates coefficients.
  LaurentElem conj() const;

  /// Evaluates with zb^k := conj(z^k); the point lists z^0..z^n (then w^0..w^n
  /// on the two-point space).
  Complex eval(std::span<const Complex> point) const;

  /// Two-point space only: restriction to the diagonal w = z.
  LaurentElem diagonal() const;

  std::string str() const;

 private:
  void canonicalize();
  void require_same(const LaurentElem& o) const;

  VarSpace space_;
  SparsePoly num_;
  std::array<int, 2> xpow_{0, 0};
};

/// Numerator of d(num x^-m)/dvar over x^(m+1), where x is the quadratic of
/// var's block: (d num) x - m num (dx/dvar). Not canonicalized.
SparsePoly quotient_rule_numerator(const SparsePoly& num, int m, std::size_t var,
                                   const VarSpace& space);

/// f(z) g(w) on the two-point space built over f's space.
LaurentElem tensor(const LaurentElem& f, const LaurentElem& g);

/// F = sum_j h_j x^j with every h_j homogeneous (bidegree (0,0)). Requires a
/// U(1)-invariant single-point element; throws MathError otherwise.
std::map<int, LaurentElem> homogeneous_slices(const LaurentElem& f);

}  // namespace cpstar
