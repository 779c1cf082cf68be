#include "cpstar/equiv.hpp"

#include <map>
#include <stdexcept>

#include "cpstar/wick.hpp"

namespace cpstar {

namespace {

constexpr std::size_t kX = 0, kAlpha = 1, kBeta = 2;

SparsePoly mono(std::size_t nvars, std::initializer_list<int> exps, const Complex& c) {
  return SparsePoly::monomial(nvars, Monomial(exps), c);
}

XSeries xseries_one(int order) { return XSeries::constant(order, xmono(0)); }

/// j (j-1) ... (j-b+1), valid for negative j too.
long falling(int j, int b) {
  long f = 1;
  for (int i = 0; i < b; ++i) f *= j - i;
  return f;
}

}  // namespace

SparsePoly xmono(int power, const Complex& c) { return mono(1, {power}, c); }

LaurentElem radial_to_laurent(const SparsePoly& radial, const VarSpace& space) {
  if (radial.nvars() != 1) throw std::invalid_argument("radial Laurent polynomial needs one variable");
  LaurentElem out(space);
  for (const auto& [m, c] : radial.terms()) out += LaurentElem::x(space, m[0]) * c;
  return out;
}

LSeries radial_to_laurent(const XSeries& radial, const VarSpace& space) {
  LSeries out(radial.order(), LaurentElem(space));
  for (int k = 0; k <= radial.order(); ++k) out[k] = radial_to_laurent(radial[k], space);
  return out;
}

XSeries radial_series(const Series<UnivarPoly>& s) {
  XSeries out(s.order(), SparsePoly(1));
  for (int k = 0; k <= s.order(); ++k)
    for (int a = 0; a <= s[k].degree(); ++a) out[k] += xmono(a, s[k][static_cast<std::size_t>(a)]);
  return out;
}

Rational a_coeff(int r, int s) {
  if (r < 0 || s < 0) throw std::invalid_argument("A^(r)_s needs r, s >= 0");
  if (r == 0) return Rational(s == 0 ? 1 : 0);
  Rational sum(0);
  for (int k = 1; k <= r; ++k) {
    Rational term = binomial(static_cast<unsigned>(r - 1), static_cast<unsigned>(k - 1)) *
                    Rational(k).pow(s + r - 1);
    if ((r + s - k) % 2 != 0) term = -term;
    sum += term;
  }
  return sum / factorial(static_cast<unsigned>(r - 1));
}

XSeries d_series(const StarContext& ctx) {
  XSeries d(ctx.order(), SparsePoly(1));
  for (int r = 0; r <= ctx.order(); ++r) d[r] = xmono(-r, Complex(ctx.d(r)));
  return d;
}

Series<SparsePoly> symbol(const StarContext& ctx) {
  const int K = ctx.order();
  Series<SparsePoly> exponent(K, SparsePoly(2));
  // (x/l) sum_r (l/x)^r d_r sum_m (-1)^(m+1) (l a)^m / m  -  x a; the (r, m) = (0, 1)
  // term cancels the subtraction
  for (int r = 0; r <= K; ++r) {
    Rational dr = ctx.d(r);
    if (dr.is_zero()) continue;
    for (int m = 1; r + m - 1 <= K; ++m) {
      if (r == 0 && m == 1) continue;
      Rational c = dr / Rational(m);
      if (m % 2 == 0) c = -c;
      exponent[r + m - 1] += mono(2, {1 - r, m}, Complex(c));
    }
  }
  return exp_truncated(exponent);
}

Series<SparsePoly> functional_equation_residual(const StarContext& ctx) {
  const int K = ctx.order();
  Series<SparsePoly> s2 = symbol(ctx);
  const std::size_t to_alpha[2] = {kX, kAlpha}, to_beta[2] = {kX, kBeta};
  Series<SparsePoly> sa(K, SparsePoly(3)), sb(K, SparsePoly(3));
  for (int k = 0; k <= K; ++k) {
    sa[k] = s2[k].remapped(to_alpha, 3);
    sb[k] = s2[k].remapped(to_beta, 3);
  }
  // g = a + b + l a b
  Series<SparsePoly> gamma(K, SparsePoly(3));
  gamma[0] = mono(3, {0, 1, 0}, 1) + mono(3, {0, 0, 1}, 1);
  if (K >= 1) gamma[1] = mono(3, {0, 1, 1}, 1);
  std::map<int, Series<SparsePoly>> gamma_pow;
  Series<SparsePoly> s_gamma(K, SparsePoly(3));
  for (int k = 0; k <= K; ++k) {
    for (const auto& [m, c] : s2[k].terms()) {
      int b = m[kAlpha];
      auto it = gamma_pow.find(b);
      if (it == gamma_pow.end())
        it = gamma_pow.emplace(b, pow(gamma, static_cast<unsigned>(b))).first;
      Series<SparsePoly> term = it->second.scaled(mono(3, {m[kX], 0, 0}, c)).shifted(k);
      s_gamma += term;
    }
  }
  Series<SparsePoly> e(K, SparsePoly(3));
  if (K >= 1) e[1] = mono(3, {1, 1, 1}, 1);
  return s_gamma * exp_truncated(e) - sa * sb;
}

XSeries s_apply_xpow(int j, const StarContext& ctx) {
  const int K = ctx.order();
  XSeries dx = d_series(ctx).scaled(xmono(1));
  if (j == 0) return xseries_one(K);
  if (j > 0) {
    // prod_{k<j} (Dx - k l)
    XSeries out = xseries_one(K);
    for (int k = 0; k < j; ++k) {
      XSeries factor = dx;
      if (K >= 1) factor[1] -= xmono(0, Complex(k));
      out *= factor;
    }
    return out;
  }
  // (Dx)^-r sum_s (l/(Dx))^s A^(r)_s
  const int r = -j;
  XSeries inv = invert(dx);
  XSeries out(K, SparsePoly(1));
  XSeries p = pow(inv, static_cast<unsigned>(r));
  for (int s = 0; s <= K; ++s) {
    Rational a = a_coeff(r, s);
    if (!a.is_zero()) out += p.shifted(s) * Complex(a);
    p *= inv;
  }
  return out;
}

XSeries s_standard_ordered_xpow(int j, const StarContext& ctx) {
  Series<SparsePoly> sym = symbol(ctx);
  XSeries out(ctx.order(), SparsePoly(1));
  for (int k = 0; k <= ctx.order(); ++k)
    for (const auto& [m, c] : sym[k].terms()) {
      long f = falling(j, m[kAlpha]);
      if (f != 0) out[k] += xmono(m[kX] + j - m[kAlpha], c * Complex(f));
    }
  return out;
}

namespace {

/// S applied to a single invariant element: sum_j h_j S(x^j).
LSeries s_on_element(const LaurentElem& f, const StarContext& ctx,
                     std::map<int, XSeries>& cache) {
  LSeries out = ctx.zero_series();
  if (f.is_zero()) return out;
  for (const auto& [j, h] : homogeneous_slices(f)) {
    auto it = cache.find(j);
    if (it == cache.end()) it = cache.emplace(j, s_apply_xpow(j, ctx)).first;
    const XSeries& sx = it->second;
    for (int k = 0; k <= ctx.order(); ++k)
      for (const auto& [m, c] : sx[k].terms()) out[k] += h.times_xpow(m[0]) * c;
  }
  return out;
}

}  // namespace

LSeries s_apply(const LSeries& f, const StarContext& ctx, bool inverse) {
  const int K = std::min(ctx.order(), f.order());
  StarContext c = ctx.with_order(K);
  std::map<int, XSeries> cache;
  LSeries out = c.zero_series();
  if (!inverse) {
    for (int i = 0; i <= K; ++i) {
      if (f[i].is_zero()) continue;
      out += s_on_element(f[i], c, cache).shifted(i);
    }
    return out;
  }
  // triangular solve of S(out) = f, one order at a time
  LSeries pending = c.zero_series();  // S applied to the solved coefficients
  for (int k = 0; k <= K; ++k) {
    out[k] = f[k] - pending[k];
    if (!out[k].is_zero()) pending += s_on_element(out[k], c, cache).shifted(k);
  }
  return out;
}

XSeries s_apply_radial(const Series<UnivarPoly>& rho, const StarContext& ctx) {
  const int K = std::min(ctx.order(), rho.order());
  StarContext c = ctx.with_order(K);
  XSeries out(K, SparsePoly(1));
  for (int k = 0; k <= K; ++k)
    for (int a = 0; a <= rho[k].degree(); ++a) {
      const Complex& coef = rho[k][static_cast<std::size_t>(a)];
      if (!coef.is_zero()) out += s_apply_xpow(a, c).shifted(k) * coef;
    }
  return out;
}

XSeries equivalence_residual(const UnivarPoly& rho1, const UnivarPoly& rho2,
                             const StarContext& ctx) {
  const int K = ctx.order();
  XSeries lhs = s_apply_radial(radial_star(rho1, rho2, ctx), ctx);
  XSeries a = s_apply_radial(Series<UnivarPoly>::constant(K, rho1), ctx);
  XSeries b = s_apply_radial(Series<UnivarPoly>::constant(K, rho2), ctx);
  return lhs - a * b;
}

LSeries tilde_star(const LSeries& f, const LSeries& g, const StarContext& ctx) {
  const int K = std::min({ctx.order(), f.order(), g.order()});
  StarContext c = ctx.with_order(K);
  LSeries fi = s_apply(f, c, true), gi = s_apply(g, c, true);
  return s_apply(wick_product(fi, gi, c), c);
}

LSeries tilde_star_homogeneous(const LaurentElem& f, const LaurentElem& g,
                               const StarContext& ctx) {
  if (!f.is_homogeneous() || !g.is_homogeneous())
    throw MathError("closed product formula needs homogeneous arguments");
  const int K = ctx.order();
  XSeries u = invert(d_series(ctx).scaled(xmono(1))).shifted(1);  // l / (Dx)
  LSeries out = ctx.zero_series();
  XSeries upow = xseries_one(K);
  std::vector<XSeries> powers{upow};
  for (int k = 1; k <= K; ++k) {
    upow *= u;
    powers.push_back(upow);
  }
  for (int r = 0; r <= K; ++r) {
    LaurentElem m = bidiff_m(f, g, r);
    if (m.is_zero()) continue;
    XSeries coeff(K, SparsePoly(1));
    for (int s = 0; r + s <= K; ++s) {
      Rational a = a_coeff(r, s) / factorial(static_cast<unsigned>(r));
      if (!a.is_zero()) coeff += powers[static_cast<std::size_t>(r + s)] * Complex(a);
    }
    LSeries radial = radial_to_laurent(coeff, ctx.space());
    for (int k = 0; k <= K; ++k)
      if (!radial[k].is_zero()) out[k] += radial[k] * m;
  }
  return out;
}

}  // namespace cpstar
