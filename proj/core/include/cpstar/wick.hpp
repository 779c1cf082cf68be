#pragma once

#include <vector>

#include "cpstar/context.hpp"
#include "cpstar/poly.hpp"
#include "cpstar/series.hpp"
#include "cpstar/univar.hpp"

namespace cpstar {

/// C_r(F, G) = sum_{|a| = r} g^a / a! d^a F / dz^a * d^a G / dzb^a for
/// r = 0..rmax, so that F * G = sum_r l^r C_r(F, G). Entries past the point
/// where either side runs out of derivatives are zero.
std::vector<LaurentElem> wick_terms(const LaurentElem& f, const LaurentElem& g, int rmax);

/// Wick product (metric-contracted) truncated at min(ctx order, input orders).
LSeries wick_product(const LSeries& f, const LSeries& g, const StarContext& ctx);
LSeries wick_product(const LaurentElem& f, const LaurentElem& g, const StarContext& ctx);

/// {F, G} = (2/i) g_kk (dF/dz^k dG/dzb^k - dF/dzb^k dG/dz^k).
LaurentElem poisson(const LaurentElem& f, const LaurentElem& g);

/// (F*G - G*F) - (i l / 2){F, G}; its l^1 coefficient vanishes.
LSeries commutator_residual(const LaurentElem& f, const LaurentElem& g, const StarContext& ctx);

/// M_r(F, G) = x^r g.. d^r F / dz^{i1..ir} d^r G / dzb^{i1..ir}, summed over
/// ordered index tuples with derivatives memoized per sorted tuple.
LaurentElem bidiff_m(const LaurentElem& f, const LaurentElem& g, int r);

/// d/dx on U(1)-invariant elements, realized as (E + Ebar) / (2x).
LaurentElem d_dx(const LaurentElem& f);

/// Embeds a polynomial in x as a radial element of the space.
LaurentElem radial_to_laurent(const UnivarPoly& rho, const VarSpace& space);

/// rho1 (*) rho2 = sum_r l^r x^r / r! rho1^(r) rho2^(r).
Series<UnivarPoly> radial_star(const UnivarPoly& rho1, const UnivarPoly& rho2,
                               const StarContext& ctx);

/// e_a (*) e_b - exp((a + b + l a b) x), with every exponential expanded in x
/// and truncated above x^max_xdeg (the comparison is exact in that range).
Series<UnivarPoly> exp_symbol_residual(const Rational& alpha, const Rational& beta,
                                       const StarContext& ctx, int max_xdeg);

/// Two-point operators on functions of (z, w).
/// N F = xi * P F, xi = g_i z^i wb^i, P = g_j d^2 / dz^j dwb^j.
LaurentElem twopoint_n(const LaurentElem& f);
/// The r-fold version xi^r P^r.
LaurentElem twopoint_m(const LaurentElem& f, int r);
/// Four-variable Euler sum.
LaurentElem twopoint_h(const LaurentElem& f);

/// m(M_r(f (x) g)) - m(prod_{s<r} (N - s(n-s)) (f (x) g)) for homogeneous f, g.
LaurentElem product_formula_residual(int r, const LaurentElem& f, const LaurentElem& g);

}  // namespace cpstar
