#pragma once

#include "cpstar/context.hpp"
#include "cpstar/poly.hpp"
#include "cpstar/series.hpp"

namespace cpstar {

/// Pullback of a function on the reduced space: a Laurent element of
/// bidegree (0, 0), i.e. annihilated by both Euler operators.
class ReducedFn {
 public:
  explicit ReducedFn(LaurentElem rep);
  const LaurentElem& rep() const { return rep_; }
  const VarSpace& space() const { return rep_.space(); }
  friend bool operator==(const ReducedFn&, const ReducedFn&) = default;

 private:
  LaurentElem rep_;
};

/// F = projection + (J - mu) . multiplier, order by order. The product is
/// pointwise for ideal_decompose and the Wick product for
/// wick_ideal_decompose.
struct DecompResult {
  LSeries projection;
  LSeries multiplier;
};

/// J = -x/2 (the metric quadratic for indefinite signatures).
LaurentElem momentum_map(const StarContext& ctx);

/// U(1)-invariance by bidegrees; agrees with Y F = 0 and F*J - J*F = 0.
bool is_invariant(const LaurentElem& f);

/// Substitutes x -> -2 mu in the homogeneous slice decomposition.
LaurentElem reduce_element(const LaurentElem& f, const StarContext& ctx);
LSeries reduce_function(const LSeries& f, const StarContext& ctx);

DecompResult ideal_decompose(const LSeries& f, const StarContext& ctx);
DecompResult wick_ideal_decompose(const LSeries& f, const StarContext& ctx);

/// c_{r,s} = sum_{k=1}^s k^(r-1) (-1)^(r-k) / (s! (s-k)! (k-1)!).
Rational k_coeff(int r, int s);

/// phi *mu psi = phi psi + sum_{r>=1} (l/(-2mu))^r sum_s c_{r,s} M~_s(phi, psi).
/// Requires D = 1 and bidegree-(0,0) coefficients.
LSeries mu_star(const LSeries& phi, const LSeries& psi, const StarContext& ctx);
LSeries mu_star(const ReducedFn& phi, const ReducedFn& psi, const StarContext& ctx);

/// Reduced product for the context's D: the closed ~* formula at x = -2 mu.
LSeries mu_star_general(const ReducedFn& phi, const ReducedFn& psi, const StarContext& ctx);

/// {phi, psi}_mu: the reduced ambient bracket of the representatives.
LaurentElem reduced_poisson(const ReducedFn& phi, const ReducedFn& psi, const StarContext& ctx);

/// (F ~* G)_mu - F_mu *mu G_mu.
LSeries reduction_compatibility_residual(const LSeries& f, const LSeries& g,
                                         const StarContext& ctx);

/// phi *mu psi obtained from the plain Wick product by splitting off Wick
/// multiples of J - mu order by order.
LSeries wick_reduce(const ReducedFn& phi, const ReducedFn& psi, const StarContext& ctx);

/// F ~* SJ - SJ ~* F - (i l / 2){F, J}.
LSeries quantum_momentum_residual(const LSeries& f, const StarContext& ctx);

/// General-D reduced product minus the D = 1 product with l -> l / D(-2mu, l).
LSeries reparametrize_residual(const ReducedFn& phi, const ReducedFn& psi, const StarContext& ctx);

/// D(-2mu, l) as a scalar series.
Series<Complex> d_at_level(const StarContext& ctx);

}  // namespace cpstar
