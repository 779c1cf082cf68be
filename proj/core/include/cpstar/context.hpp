#pragma once

#include <vector>

#include "cpstar/poly.hpp"
#include "cpstar/scalar.hpp"
#include "cpstar/series.hpp"

namespace cpstar {

using LSeries = Series<LaurentElem>;

/// Parameters every product reads: variable space (dimension and metric),
/// truncation order K, the coefficients d_r of D = sum_r (l/x)^r d_r, and
/// the reduction level mu.
class StarContext {
 public:
  static constexpr int kDefaultOrder = 6;

  StarContext() : StarContext(VarSpace::euclidean(1)) {}
  explicit StarContext(VarSpace space, int order = kDefaultOrder,
                       std::vector<Rational> d = {Rational(1)}, Rational mu = Rational(-1, 2));

  const VarSpace& space() const { return space_; }
  int order() const { return order_; }
  const std::vector<Rational>& d() const { return d_; }
  /// d_r, zero beyond the stored list.
  Rational d(int r) const;
  bool d_trivial() const;
  const Rational& mu() const { return mu_; }
  /// -2 mu, the value x takes on the reduction level set.
  Rational level() const { return Rational(-2) * mu_; }

  StarContext with_order(int order) const;
  StarContext with_d(std::vector<Rational> d) const;
  StarContext with_mu(Rational mu) const;
  StarContext with_space(VarSpace space) const;

  LaurentElem zero() const { return LaurentElem(space_); }
  LaurentElem one() const { return {space_, Complex(1)}; }
  LSeries zero_series() const { return LSeries(order_, zero()); }
  LSeries lift(const LaurentElem& f) const { return LSeries::constant(order_, f); }

 private:
  VarSpace space_;
  int order_;
  std::vector<Rational> d_;
  Rational mu_;
};

}  // namespace cpstar
