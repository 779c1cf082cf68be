#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "cpstar/scalar.hpp"

namespace cpstar {

inline constexpr std::size_t kMaxVars = 16;

/// Dense exponent vector. Slots beyond the owning polynomial's variable count
/// stay zero so that ordering and equality never depend on them. Exponents are
/// signed so the same type carries Laurent monomials (symbol calculus in x).
class Monomial {
 public:
  using Exp = std::int16_t;

  Monomial() = default;
  Monomial(std::initializer_list<int> exps);

  Exp operator[](std::size_t v) const { return e_[v]; }
  Exp& operator[](std::size_t v) { return e_[v]; }

  Monomial& operator*=(const Monomial& o) {
    for (std::size_t v = 0; v < kMaxVars; ++v) e_[v] = static_cast<Exp>(e_[v] + o.e_[v]);
    return *this;
  }
  friend Monomial operator*(Monomial a, const Monomial& b) { return a *= b; }

  bool is_one() const;
  int degree(std::size_t first, std::size_t count) const;

  friend auto operator<=>(const Monomial&, const Monomial&) = default;
  friend bool operator==(const Monomial&, const Monomial&) = default;

 private:
  std::array<Exp, kMaxVars> e_{};
};

/// Sparse multivariate (Laurent) polynomial over the Gaussian rationals in a
/// fixed number of anonymous variables. No zero coefficient is ever stored.
class SparsePoly {
 public:
  using Terms = std::map<Monomial, Complex>;

  SparsePoly() = default;
  explicit SparsePoly(std::size_t nvars);
  SparsePoly(std::size_t nvars, const Complex& c);

  static SparsePoly variable(std::size_t nvars, std::size_t v, int power = 1);
  static SparsePoly monomial(std::size_t nvars, const Monomial& m, const Complex& c);

  std::size_t nvars() const { return nvars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Coefficient of the constant monomial.
  Complex constant_term() const;
  Complex coeff(const Monomial& m) const;

  /// Adds c*m, dropping the term if it cancels.
  void add_term(const Monomial& m, const Complex& c);

  SparsePoly& operator+=(const SparsePoly& o);
  SparsePoly& operator-=(const SparsePoly& o);
  SparsePoly& operator*=(const Complex& c);
  SparsePoly operator-() const;
  friend SparsePoly operator+(SparsePoly a, const SparsePoly& b) { return a += b; }
  friend SparsePoly operator-(SparsePoly a, const SparsePoly& b) { return a -= b; }
  friend SparsePoly operator*(SparsePoly a, const Complex& c) { return a *= c; }
  friend SparsePoly operator*(const Complex& c, SparsePoly a) { return a *= c; }
  friend SparsePoly operator*(const SparsePoly& a, const SparsePoly& b);
  SparsePoly& operator*=(const SparsePoly& o) { return *this = *this * o; }
  friend bool operator==(const SparsePoly& a, const SparsePoly& b) {
    return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
  }

  SparsePoly pow(unsigned e) const;
  SparsePoly diff(std::size_t v) const;
  /// Multiplies every term by the monomial m.
  SparsePoly shifted(const Monomial& m) const;
  /// Applies c -> conj(c) and a permutation of the variables.
  SparsePoly conj_permuted(std::span<const std::size_t> perm) const;
  /// Renames variable v to perm[v] in a space with new_nvars variables.
  SparsePoly remapped(std::span<const std::size_t> perm, std::size_t new_nvars) const;
  /// Substitutes variable v by the polynomial value (same variable count).
  SparsePoly substitute(std::size_t v, const SparsePoly& value) const;
  Complex eval(std::span<const Complex> point) const;

  /// Maps each term through f; terms returning a zero coefficient vanish.
  SparsePoly transform(const std::function<Complex(const Monomial&, const Complex&)>& f) const;

 private:
  void check(const SparsePoly& o) const;

  std::size_t nvars_ = 0;
  Terms terms_;
};

}  // namespace cpstar
