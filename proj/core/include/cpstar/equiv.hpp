#pragma once

#include "cpstar/context.hpp"
#include "cpstar/series.hpp"
#include "cpstar/sparse_poly.hpp"
#include "cpstar/univar.hpp"

namespace cpstar {

/// Laurent polynomials in the single variable x (radial functions under a
/// general D) and series of them.
using XSeries = Series<SparsePoly>;

/// c * x^power as a one-variable Laurent polynomial.
SparsePoly xmono(int power, const Complex& c = Complex(1));
/// Sum c_a x^a of a radial Laurent polynomial as an element of the space.
LaurentElem radial_to_laurent(const SparsePoly& radial, const VarSpace& space);
LSeries radial_to_laurent(const XSeries& radial, const VarSpace& space);
XSeries radial_series(const Series<UnivarPoly>& s);

/// A^(r)_s: coefficients of prod_{k=1}^r (1 + k u)^-1 = sum_s A^(r)_s u^s.
Rational a_coeff(int r, int s);

/// D(x, l) = sum_r (l/x)^r d_r as a series of Laurent polynomials in x.
XSeries d_series(const StarContext& ctx);

/// The symbol S^(x, a) = exp((x/l)(D log(1 + l a) - l a)), coefficients in
/// the variables (x, a) = slots (0, 1).
Series<SparsePoly> symbol(const StarContext& ctx);

/// S^(x, g) e^{l a b x} - S^(x, a) S^(x, b) with g = l a b + a + b; variables
/// (x, a, b) = slots (0, 1, 2).
Series<SparsePoly> functional_equation_residual(const StarContext& ctx);

/// S x^j from the closed product / A-expansion formulas.
XSeries s_apply_xpow(int j, const StarContext& ctx);

/// S x^j by reading the symbol in standard order (x-powers left, d/dx right).
XSeries s_standard_ordered_xpow(int j, const StarContext& ctx);

/// S (or S^-1 when `inverse`) on a series whose coefficients are
/// U(1)-invariant. Throws MathError on non-invariant input.
LSeries s_apply(const LSeries& f, const StarContext& ctx, bool inverse = false);

/// S on a radial polynomial series.
XSeries s_apply_radial(const Series<UnivarPoly>& rho, const StarContext& ctx);

/// S(rho1 (*) rho2) - (S rho1)(S rho2).
XSeries equivalence_residual(const UnivarPoly& rho1, const UnivarPoly& rho2,
                             const StarContext& ctx);

/// F ~* G = S((S^-1 F) * (S^-1 G)) on U(1)-invariant series.
LSeries tilde_star(const LSeries& f, const LSeries& g, const StarContext& ctx);

/// Closed formula for homogeneous f, g:
/// sum_r 1/r! (l/(Dx))^r prod_{k=1}^r (1 + k l/(Dx))^-1 M_r(f, g).
LSeries tilde_star_homogeneous(const LaurentElem& f, const LaurentElem& g,
                               const StarContext& ctx);

}  // namespace cpstar
