#include "cpstar/reduce.hpp"

#include <stdexcept>

#include "cpstar/equiv.hpp"
#include "cpstar/wick.hpp"

namespace cpstar {

ReducedFn::ReducedFn(LaurentElem rep) : rep_(std::move(rep)) {
  if (rep_.space().two_point() || !rep_.is_homogeneous())
    throw MathError("reduced functions are represented by bidegree (0,0) elements: " + rep_.str());
}

LaurentElem momentum_map(const StarContext& ctx) {
  return LaurentElem::x(ctx.space()) * Complex(Rational(-1, 2));
}

bool is_invariant(const LaurentElem& f) { return f.is_u1_invariant(); }

LaurentElem reduce_element(const LaurentElem& f, const StarContext& ctx) {
  Complex level(ctx.level());
  LaurentElem out(f.space());
  for (const auto& [j, h] : homogeneous_slices(f)) out += h * level.pow(j);
  return out;
}

LSeries reduce_function(const LSeries& f, const StarContext& ctx) {
  LSeries out(f.order(), LaurentElem(ctx.space()));
  for (int k = 0; k <= f.order(); ++k) out[k] = reduce_element(f[k], ctx);
  return out;
}

namespace {

/// (x^j - c^j) / (x - c) as an element of the space.
LaurentElem difference_quotient(int j, const Rational& c, const VarSpace& s) {
  LaurentElem q(s);
  int p = j >= 0 ? j : -j;
  for (int i = 0; i < p; ++i) q += LaurentElem::x(s, i) * Complex(c.pow(p - 1 - i));
  if (j >= 0) return q;
  // x^-p - c^-p = -(x - c) q_p(x) x^-p c^-p
  return q.times_xpow(-p) * Complex(-c.pow(-p));
}

struct ElementSplit {
  LaurentElem projection;
  LaurentElem multiplier;
};

ElementSplit split_element(const LaurentElem& f, const StarContext& ctx) {
  const VarSpace& s = ctx.space();
  ElementSplit out{LaurentElem(s), LaurentElem(s)};
  const Rational c = ctx.level();
  for (const auto& [j, h] : homogeneous_slices(f)) {
    out.projection += h * Complex(c.pow(j));
    if (j != 0) out.multiplier += h * difference_quotient(j, c, s);
  }
  // x - c = -2 (J - mu)
  out.multiplier *= Complex(-2);
  return out;
}

LaurentElem j_minus_mu(const StarContext& ctx) {
  return momentum_map(ctx) - LaurentElem(ctx.space(), Complex(ctx.mu()));
}

}  // namespace

DecompResult ideal_decompose(const LSeries& f, const StarContext& ctx) {
  DecompResult out{LSeries(f.order(), ctx.zero()), LSeries(f.order(), ctx.zero())};
  const LaurentElem jm = j_minus_mu(ctx);
  for (int k = 0; k <= f.order(); ++k) {
    ElementSplit sp = split_element(f[k], ctx);
    if (!(sp.projection + jm * sp.multiplier == f[k]))
      throw std::logic_error("ideal decomposition failed to reproduce its input");
    out.projection[k] = std::move(sp.projection);
    out.multiplier[k] = std::move(sp.multiplier);
  }
  return out;
}

DecompResult wick_ideal_decompose(const LSeries& f, const StarContext& ctx) {
  const int K = std::min(ctx.order(), f.order());
  StarContext c = ctx.with_order(K);
  DecompResult out{c.zero_series(), c.zero_series()};
  const LSeries jm = c.lift(j_minus_mu(c));
  LSeries rest = f.truncated(K);
  for (int k = 0; k <= K; ++k) {
    if (rest[k].is_zero()) continue;
    ElementSplit sp = split_element(rest[k], c);
    out.projection[k] = sp.projection;
    out.multiplier[k] = sp.multiplier;
    // J - mu is quadratic, so its Wick product with anything stops at l^1
    rest -= wick_product(jm, LSeries::monomial(K, k, sp.multiplier), c);
  }
  return out;
}

Rational k_coeff(int r, int s) {
  if (s < 1 || s > r) throw std::invalid_argument("c_{r,s} needs 1 <= s <= r");
  Rational sum(0);
  for (int k = 1; k <= s; ++k) {
    Rational t = Rational(k).pow(r - 1) /
                 (factorial(static_cast<unsigned>(s)) * factorial(static_cast<unsigned>(s - k)) *
                  factorial(static_cast<unsigned>(k - 1)));
    if ((r - k) % 2 != 0) t = -t;
    sum += t;
  }
  return sum;
}

LSeries mu_star(const LSeries& phi, const LSeries& psi, const StarContext& ctx) {
  if (!ctx.d_trivial()) throw std::invalid_argument("mu_star is the D = 1 product");
  for (const auto* s : {&phi, &psi})
    for (const LaurentElem& c : s->coeffs())
      if (!c.is_homogeneous()) throw MathError("mu_star needs reduced (bidegree (0,0)) inputs");
  const int K = std::min({ctx.order(), phi.order(), psi.order()});
  const Rational inv_level = Rational(1) / ctx.level();
  LSeries out(K, ctx.zero());
  for (int i = 0; i <= K; ++i) {
    if (phi[i].is_zero()) continue;
    for (int j = 0; i + j <= K; ++j) {
      if (psi[j].is_zero()) continue;
      const int top = K - i - j;
      std::vector<LaurentElem> m;
      for (int s = 0; s <= top; ++s) m.push_back(bidiff_m(phi[i], psi[j], s));
      out[i + j] += m[0];
      for (int r = 1; r <= top; ++r) {
        LaurentElem kr(ctx.space());
        for (int s = 1; s <= r; ++s)
          if (!m[static_cast<std::size_t>(s)].is_zero())
            kr += m[static_cast<std::size_t>(s)] * Complex(k_coeff(r, s));
        out[i + j + r] += kr * Complex(inv_level.pow(r));
      }
    }
  }
  return out;
}

LSeries mu_star(const ReducedFn& phi, const ReducedFn& psi, const StarContext& ctx) {
  return mu_star(ctx.lift(phi.rep()), ctx.lift(psi.rep()), ctx);
}

LSeries mu_star_general(const ReducedFn& phi, const ReducedFn& psi, const StarContext& ctx) {
  return reduce_function(tilde_star_homogeneous(phi.rep(), psi.rep(), ctx), ctx);
}

LaurentElem reduced_poisson(const ReducedFn& phi, const ReducedFn& psi, const StarContext& ctx) {
  return reduce_element(poisson(phi.rep(), psi.rep()), ctx);
}

LSeries reduction_compatibility_residual(const LSeries& f, const LSeries& g,
                                         const StarContext& ctx) {
  LSeries lhs = reduce_function(tilde_star(f, g, ctx), ctx);
  return lhs - mu_star(reduce_function(f, ctx), reduce_function(g, ctx), ctx);
}

LSeries wick_reduce(const ReducedFn& phi, const ReducedFn& psi, const StarContext& ctx) {
  LSeries w = wick_product(phi.rep(), psi.rep(), ctx);
  return wick_ideal_decompose(w, ctx).projection;
}

LSeries quantum_momentum_residual(const LSeries& f, const StarContext& ctx) {
  const LaurentElem j = momentum_map(ctx);
  LSeries sj = s_apply(ctx.lift(j), ctx);
  LSeries res = tilde_star(f, sj, ctx) - tilde_star(sj, f, ctx);
  LSeries bracket(res.order(), ctx.zero());
  for (int k = 0; k + 1 <= res.order(); ++k)
    bracket[k + 1] = poisson(f[k], j) * Complex(Rational(0), Rational(1, 2));
  return res - bracket;
}

Series<Complex> d_at_level(const StarContext& ctx) {
  Series<Complex> d(ctx.order(), Complex());
  const Rational inv_level = Rational(1) / ctx.level();
  for (int r = 0; r <= ctx.order(); ++r) d[r] = Complex(ctx.d(r) * inv_level.pow(r));
  return d;
}

LSeries reparametrize_residual(const ReducedFn& phi, const ReducedFn& psi,
                               const StarContext& ctx) {
  LSeries general = mu_star_general(phi, psi, ctx);
  LSeries canonical = mu_star(phi, psi, ctx.with_d({Rational(1)}));
  // l -> l / D(-2mu, l)
  Series<Complex> u = invert(d_at_level(ctx)).shifted(1);
  return general - reparametrize(canonical, u);
}

}  // namespace cpstar
