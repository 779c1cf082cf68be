#include "cpstar/verify.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <optional>
#include <stdexcept>

#include "cpstar/equiv.hpp"
#include "cpstar/moreno.hpp"
#include "cpstar/random.hpp"
#include "cpstar/reduce.hpp"
#include "cpstar/wick.hpp"

namespace cpstar {

bool Report::all_passed() const {
  for (const auto& c : checks_)
    if (!c.passed) return false;
  return true;
}

double Report::seconds() const {
  double t = 0;
  for (const auto& c : checks_) t += c.seconds;
  return t;
}

namespace {

using Failure = std::optional<std::string>;

CheckResult timed(std::string name, const std::function<Failure()>& body) {
  auto start = std::chrono::steady_clock::now();
  CheckResult r{std::move(name), false, "", 0};
  try {
    Failure f = body();
    r.passed = !f.has_value();
    if (f) r.detail = *f;
  } catch (const std::exception& e) {
    r.detail = std::string("exception: ") + e.what();
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string clip(std::string s) {
  if (s.size() > 400) s = s.substr(0, 400) + " ...";
  return s;
}

template <class T>
Failure series_zero(const Series<T>& s, const std::string& what) {
  for (int k = 0; k <= s.order(); ++k)
    if (!CarrierTraits<T>::is_zero(s[k])) {
      if constexpr (requires { s[k].str(); }) {
        return clip(what + ": l^" + std::to_string(k) + " residual " + s[k].str());
      } else {
        return what + ": l^" + std::to_string(k) + " residual nonzero";
      }
    }
  return std::nullopt;
}

Failure elem_zero(const LaurentElem& e, const std::string& what) {
  if (e.is_zero()) return std::nullopt;
  return clip(what + ": residual " + e.str());
}

Failure rational_zero(const Rational& r, const std::string& what) {
  if (r.is_zero()) return std::nullopt;
  return what + ": residual " + r.str();
}

LSeries conj_series(const LSeries& s) {
  LSeries out = s;
  for (int k = 0; k <= s.order(); ++k) out[k] = s[k].conj();
  return out;
}

/// Sum_r l^r / r! x^r rho^(r) d^r F / dx^r.
LSeries radial_left_action(const UnivarPoly& rho, const LaurentElem& f, const StarContext& ctx) {
  const VarSpace& s = ctx.space();
  LSeries out = ctx.zero_series();
  LaurentElem dr = f;
  for (int r = 0; r <= ctx.order(); ++r) {
    if (r > 0) dr = d_dx(dr);
    LaurentElem c = LaurentElem::x(s, r) *
                    radial_to_laurent(rho.derivative(static_cast<unsigned>(r)), s) * dr;
    out[r] = c * Complex(Rational(1) / factorial(static_cast<unsigned>(r)));
  }
  return out;
}

LSeries radial_laurent_series(const Series<UnivarPoly>& s, const VarSpace& space) {
  LSeries out(s.order(), LaurentElem(space));
  for (int k = 0; k <= s.order(); ++k) out[k] = radial_to_laurent(s[k], space);
  return out;
}

StarContext with_d_or_default(const StarContext& ctx) {
  if (!ctx.d_trivial()) return ctx;
  return ctx.with_d({Rational(1), Rational(1)});
}

}  // namespace

Rational a_coeff_by_inversion(int r, int s) {
  Series<Complex> prod = Series<Complex>::constant(s, Complex(1));
  for (int k = 1; k <= r; ++k) {
    Series<Complex> f(s, Complex());
    f[0] = Complex(1);
    if (s >= 1) f[1] = Complex(k);
    prod = prod * f;
  }
  return invert(prod)[s].re();
}

Rational a_coeff_by_partial_fractions(int r, int s) {
  // prod_{k=1}^r (1 + k u)^-1 = sum_k c_k / (1 + k u), c_k = prod_{j != k} k / (k - j)
  Rational sum(0);
  for (int k = 1; k <= r; ++k) {
    Rational c(1);
    for (int j = 1; j <= r; ++j)
      if (j != k) c *= Rational(k, k - j);
    sum += c * Rational(-k).pow(s);
  }
  return sum;
}

Report check_wick_associativity(const VarSpace& s, int cases, int max_degree, std::uint64_t seed) {
  Report rep;
  RandomSource rng(seed);
  const StarContext ctx(s, 2 * max_degree + 1);
  rep.add(timed("wick associativity", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      LaurentElem f = rng.polynomial(s, max_degree);
      LaurentElem g = rng.polynomial(s, max_degree);
      LaurentElem h = rng.polynomial(s, max_degree);
      LSeries lhs = wick_product(wick_product(f, g, ctx), ctx.lift(h), ctx);
      LSeries rhs = wick_product(ctx.lift(f), wick_product(g, h, ctx), ctx);
      if (!lhs[ctx.order()].is_zero() || !rhs[ctx.order()].is_zero())
        return "polynomial product did not terminate below the truncation order";
      if (auto e = series_zero(lhs - rhs, "case " + std::to_string(i))) return e;
    }
    return std::nullopt;
  }));
  return rep;
}

Report check_commutator(const VarSpace& s, int cases, int order, std::uint64_t seed) {
  Report rep;
  RandomSource rng(seed);
  const StarContext ctx(s, order);
  rep.add(timed("first-order commutator", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      LaurentElem f = i % 2 ? rng.invariant(s, 2) : rng.polynomial(s, 3);
      LaurentElem g = i % 3 ? rng.polynomial(s, 3) : rng.homogeneous(s, 2);
      LSeries res = commutator_residual(f, g, ctx);
      if (auto e = elem_zero(res[1], "case " + std::to_string(i))) return e;
    }
    return std::nullopt;
  }));
  return rep;
}

Report check_momentum_commutator(const VarSpace& s, int cases, int order, std::uint64_t seed) {
  Report rep;
  RandomSource rng(seed);
  const StarContext ctx(s, order);
  rep.add(timed("momentum map commutator", [&]() -> Failure {
    const LaurentElem j = momentum_map(ctx);
    for (int i = 0; i < cases; ++i) {
      LaurentElem f = rng.invariant(s, 2);
      LSeries res = wick_product(f, j, ctx) - wick_product(j, f, ctx);
      res[1] -= poisson(f, j) * Complex(Rational(0), Rational(1, 2));
      if (auto e = series_zero(res, "case " + std::to_string(i))) return e;
    }
    return std::nullopt;
  }));
  return rep;
}

Report check_wick_identities(const VarSpace& s, int cases, int order, std::uint64_t seed) {
  Report rep;
  RandomSource rng(seed);
  const StarContext ctx(s, order);
  rep.add(timed("radial acts by x-derivatives", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      UnivarPoly rho = rng.radial_poly(2);
      LaurentElem r = radial_to_laurent(rho, s);
      LaurentElem f = rng.invariant(s, 2);
      LSeries expected = radial_left_action(rho, f, ctx);
      std::string tag = "case " + std::to_string(i);
      if (auto e = series_zero(wick_product(r, f, ctx) - expected, tag + " R*F")) return e;
      if (auto e = series_zero(wick_product(f, r, ctx) - expected, tag + " F*R")) return e;
    }
    return std::nullopt;
  }));
  rep.add(timed("radial functions commute", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      UnivarPoly rho1 = rng.radial_poly(2), rho2 = rng.radial_poly(2);
      LaurentElem r1 = radial_to_laurent(rho1, s), r2 = radial_to_laurent(rho2, s);
      LSeries ab = wick_product(r1, r2, ctx);
      std::string tag = "case " + std::to_string(i);
      if (auto e = series_zero(ab - wick_product(r2, r1, ctx), tag + " commutator")) return e;
      LSeries radial = radial_laurent_series(radial_star(rho1, rho2, ctx), s);
      if (auto e = series_zero(ab - radial, tag + " radial form")) return e;
    }
    return std::nullopt;
  }));
  rep.add(timed("radial times homogeneous is pointwise", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      LaurentElem r = rng.radial(s, 2);
      LaurentElem f = rng.homogeneous(s, 2);
      LSeries pointwise = ctx.lift(r * f);
      std::string tag = "case " + std::to_string(i);
      if (auto e = series_zero(wick_product(r, f, ctx) - pointwise, tag + " R*f")) return e;
      if (auto e = series_zero(wick_product(f, r, ctx) - pointwise, tag + " f*R")) return e;
    }
    return std::nullopt;
  }));
  rep.add(timed("homogeneous product through M_r", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      LaurentElem f = rng.homogeneous(s, 2), g = rng.homogeneous(s, 2);
      LSeries expected = ctx.zero_series();
      std::string tag = "case " + std::to_string(i);
      for (int r = 0; r <= ctx.order(); ++r) {
        LaurentElem m = bidiff_m(f, g, r);
        if (!m.euler(EulerOp::E).is_zero() || !m.euler(EulerOp::Ebar).is_zero())
          return clip(tag + ": M_" + std::to_string(r) + " not homogeneous: " + m.str());
        expected[r] = m.times_xpow(-r) * Complex(Rational(1) / factorial(static_cast<unsigned>(r)));
      }
      if (auto e = series_zero(wick_product(f, g, ctx) - expected, tag)) return e;
    }
    return std::nullopt;
  }));
  return rep;
}

Report check_symbol(int order, const std::vector<Rational>& d) {
  Report rep;
  for (const auto& dd : {std::vector<Rational>{Rational(1)}, d}) {
    StarContext ctx(VarSpace::euclidean(1), order, dd);
    std::string tag = ctx.d_trivial() ? " (D = 1)" : " (general D)";
    rep.add(timed("symbol functional equation" + tag, [&]() -> Failure {
      return series_zero(functional_equation_residual(ctx), "functional equation");
    }));
    rep.add(timed("symbol at alpha = 0" + tag, [&]() -> Failure {
      Series<SparsePoly> sym = symbol(ctx);
      for (int k = 0; k <= sym.order(); ++k) {
        SparsePoly at0 = sym[k].transform(
            [](const Monomial& m, const Complex& c) { return m[1] == 0 ? c : Complex(); });
        SparsePoly expected(2, Complex(k == 0 ? 1 : 0));
        if (!(at0 == expected)) return "order " + std::to_string(k) + " differs from 1";
      }
      return std::nullopt;
    }));
  }
  return rep;
}

Report check_s_action(int order, const std::vector<Rational>& d, int jmax) {
  Report rep;
  for (const auto& dd : {std::vector<Rational>{Rational(1)}, d}) {
    StarContext ctx(VarSpace::euclidean(1), order, dd);
    std::string tag = ctx.d_trivial() ? " (D = 1)" : " (general D)";
    rep.add(timed("S on powers of x matches standard ordering" + tag, [&]() -> Failure {
      for (int j = -jmax; j <= jmax; ++j) {
        XSeries diff = s_apply_xpow(j, ctx) - s_standard_ordered_xpow(j, ctx);
        if (auto e = series_zero(diff, "j = " + std::to_string(j))) return e;
      }
      return std::nullopt;
    }));
  }
  return rep;
}

Report check_a_table(int rmax) {
  Report rep;
  rep.add(timed("A coefficients against series inversion and partial fractions", [&]() -> Failure {
    for (int r = 1; r <= rmax; ++r)
      for (int s = 0; s <= rmax; ++s) {
        Rational a = a_coeff(r, s);
        std::string tag = "A(" + std::to_string(r) + ")_" + std::to_string(s);
        if (a != a_coeff_by_inversion(r, s)) return tag + " differs from series inversion";
        if (a != a_coeff_by_partial_fractions(r, s)) return tag + " differs from partial fractions";
      }
    const long spot2[] = {1, -3, 7, -15};
    for (int s = 0; s < 4; ++s) {
      if (a_coeff(1, s) != Rational(s % 2 ? -1 : 1)) return "A(1) spot value";
      if (a_coeff(2, s) != Rational(spot2[s])) return "A(2) spot value";
    }
    return std::nullopt;
  }));
  return rep;
}

Report check_radial_equivalence(const StarContext& ctx, int cases, std::uint64_t seed) {
  Report rep;
  RandomSource rng(seed);
  rep.add(timed("S intertwines the radial product", [&]() -> Failure {
    UnivarPoly x = UnivarPoly::monomial(UVar::x, 1);
    if (auto e = series_zero(equivalence_residual(x, x, ctx), "x, x")) return e;
    for (int i = 0; i < cases; ++i) {
      UnivarPoly a = rng.radial_poly(3), b = rng.radial_poly(3);
      if (auto e = series_zero(equivalence_residual(a, b, ctx), "case " + std::to_string(i)))
        return e;
    }
    return std::nullopt;
  }));
  return rep;
}

Report check_tilde(const StarContext& ctx, int cases, std::uint64_t seed) {
  Report rep;
  RandomSource rng(seed);
  const VarSpace& s = ctx.space();
  auto star = [&](const LaurentElem& a, const LaurentElem& b) {
    return tilde_star(ctx.lift(a), ctx.lift(b), ctx);
  };
  auto pointwise_both_sides = [&](const char* what, auto make_left, auto make_right) {
    rep.add(timed(what, [&]() -> Failure {
      for (int i = 0; i < cases; ++i) {
        LaurentElem a = make_left(), b = make_right();
        LSeries expected = ctx.lift(a * b);
        std::string tag = "case " + std::to_string(i);
        if (auto e = series_zero(star(a, b) - expected, tag + " left")) return e;
        if (auto e = series_zero(star(b, a) - expected, tag + " right")) return e;
      }
      return std::nullopt;
    }));
  };
  pointwise_both_sides(
      "radial ~* radial is pointwise", [&] { return rng.radial(s, 2); },
      [&] { return rng.radial(s, 2); });
  pointwise_both_sides(
      "radial ~* invariant is pointwise", [&] { return rng.radial(s, 2); },
      [&] { return rng.invariant(s, 2); });
  pointwise_both_sides(
      "radial ~* homogeneous is pointwise", [&] { return rng.radial(s, 2); },
      [&] { return rng.homogeneous(s, 2); });
  rep.add(timed("~* closed formula on homogeneous pairs", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      LaurentElem f = rng.homogeneous(s, 2), g = rng.homogeneous(s, 2);
      if (auto e = series_zero(star(f, g) - tilde_star_homogeneous(f, g, ctx),
                               "case " + std::to_string(i)))
        return e;
    }
    return std::nullopt;
  }));
  rep.add(timed("S inverse undoes S", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      LSeries f = ctx.zero_series();
      for (int k = 0; k <= std::min(2, ctx.order()); ++k) f[k] = rng.invariant(s, 2);
      LSeries back = s_apply(s_apply(f, ctx), ctx, true);
      if (auto e = series_zero(back - f, "case " + std::to_string(i))) return e;
    }
    return std::nullopt;
  }));
  return rep;
}

Report check_tilde_associativity(const StarContext& ctx, int cases, std::uint64_t seed) {
  Report rep;
  RandomSource rng(seed);
  const VarSpace& s = ctx.space();
  rep.add(timed("~* associativity", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      LSeries f = ctx.lift(rng.invariant(s, 1)), g = ctx.lift(rng.invariant(s, 1)),
              h = ctx.lift(rng.invariant(s, 1));
      LSeries lhs = tilde_star(tilde_star(f, g, ctx), h, ctx);
      LSeries rhs = tilde_star(f, tilde_star(g, h, ctx), ctx);
      if (auto e = series_zero(lhs - rhs, "case " + std::to_string(i))) return e;
    }
    return std::nullopt;
  }));
  return rep;
}

Report check_mu_star(const StarContext& ctx0, int cases, std::uint64_t seed) {
  Report rep;
  RandomSource rng(seed);
  const StarContext ctx = ctx0.with_d({Rational(1)});
  const VarSpace& s = ctx.space();
  auto reduced = [&] { return ReducedFn(rng.homogeneous(s, 2)); };
  rep.add(timed("reduced product associativity", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      ReducedFn a = reduced(), b = reduced(), c = reduced();
      LSeries lhs = mu_star(mu_star(a, b, ctx), ctx.lift(c.rep()), ctx);
      LSeries rhs = mu_star(ctx.lift(a.rep()), mu_star(b, c, ctx), ctx);
      if (auto e = series_zero(lhs - rhs, "case " + std::to_string(i))) return e;
    }
    return std::nullopt;
  }));
  rep.add(timed("reduced product unit", [&]() -> Failure {
    ReducedFn one(ctx.one());
    for (int i = 0; i < cases; ++i) {
      ReducedFn a = reduced();
      if (auto e = series_zero(mu_star(one, a, ctx) - ctx.lift(a.rep()), "left unit")) return e;
      if (auto e = series_zero(mu_star(a, one, ctx) - ctx.lift(a.rep()), "right unit")) return e;
    }
    return std::nullopt;
  }));
  rep.add(timed("reduced first-order commutator", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      ReducedFn a = reduced(), b = reduced();
      LSeries comm = mu_star(a, b, ctx) - mu_star(b, a, ctx);
      LaurentElem br = reduced_poisson(a, b, ctx);
      std::string tag = "case " + std::to_string(i);
      if (auto e = elem_zero(comm[0], tag + " order 0")) return e;
      if (auto e = elem_zero(comm[1] - br * Complex(Rational(0), Rational(1, 2)), tag)) return e;
      if (auto e = elem_zero(br + reduced_poisson(b, a, ctx), tag + " antisymmetry")) return e;
    }
    return std::nullopt;
  }));
  rep.add(timed("reduced product conjugation", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      ReducedFn a = reduced(), b = reduced();
      LSeries lhs = conj_series(mu_star(a, b, ctx));
      LSeries rhs = mu_star(ReducedFn(b.rep().conj()), ReducedFn(a.rep().conj()), ctx);
      if (auto e = series_zero(lhs - rhs, "case " + std::to_string(i))) return e;
    }
    return std::nullopt;
  }));
  return rep;
}

Report check_k_table(int rmax) {
  Report rep;
  rep.add(timed("K coefficient table", [&]() -> Failure {
    struct Spot { int r, s; Rational v; };
    const Spot spots[] = {{1, 1, Rational(1)},     {2, 1, Rational(-1)},   {2, 2, Rational(1, 2)},
                          {3, 1, Rational(1)},     {3, 2, Rational(-3, 2)}, {3, 3, Rational(1, 6)}};
    for (const auto& sp : spots)
      if (k_coeff(sp.r, sp.s) != sp.v)
        return "c_{" + std::to_string(sp.r) + "," + std::to_string(sp.s) + "} = " +
               k_coeff(sp.r, sp.s).str();
    for (int r = 1; r <= rmax; ++r)
      for (int s = 1; s <= r; ++s)
        if (k_coeff(r, s) != a_coeff(s, r - s) / factorial(static_cast<unsigned>(s)))
          return "c_{" + std::to_string(r) + "," + std::to_string(s) + "} != A/s!";
    return std::nullopt;
  }));
  return rep;
}

Report check_triangle(const StarContext& ctx0, int cases, std::uint64_t seed) {
  Report rep;
  RandomSource rng(seed);
  const StarContext ctx = ctx0.with_d({Rational(1)});
  const VarSpace& s = ctx.space();
  rep.add(timed("reduced product: closed formula, reduced ~*, Wick separation agree", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      ReducedFn a(rng.homogeneous(s, 2)), b(rng.homogeneous(s, 2));
      LSeries m = mu_star(a, b, ctx);
      LSeries t = reduce_function(tilde_star(ctx.lift(a.rep()), ctx.lift(b.rep()), ctx), ctx);
      LSeries w = wick_reduce(a, b, ctx);
      std::string tag = "case " + std::to_string(i);
      if (auto e = series_zero(m - t, tag + " closed vs ~*")) return e;
      if (auto e = series_zero(m - w, tag + " closed vs Wick")) return e;
    }
    return std::nullopt;
  }));
  rep.add(timed("reduction is a homomorphism on invariants", [&]() -> Failure {
    LSeries xs = ctx.lift(LaurentElem::x(s));
    for (int i = 0; i < cases; ++i) {
      LSeries f = ctx.lift(rng.invariant(s, 1)), g = ctx.lift(rng.invariant(s, 1));
      std::string tag = "case " + std::to_string(i);
      if (auto e = series_zero(reduction_compatibility_residual(f, g, ctx), tag)) return e;
      if (auto e = series_zero(reduction_compatibility_residual(xs, g, ctx), tag + " x")) return e;
    }
    return std::nullopt;
  }));
  return rep;
}

Report check_remarks(const StarContext& ctx0, int cases, std::uint64_t seed) {
  Report rep;
  RandomSource rng(seed);
  const StarContext ctx = with_d_or_default(ctx0);
  const VarSpace& s = ctx.space();
  rep.add(timed("general D is a reparametrization", [&]() -> Failure {
    for (int i = 0; i < cases; ++i) {
      ReducedFn a(rng.homogeneous(s, 2)), b(rng.homogeneous(s, 2));
      if (auto e = series_zero(reparametrize_residual(a, b, ctx), "case " + std::to_string(i)))
        return e;
    }
    return std::nullopt;
  }));
  rep.add(timed("quantum momentum map", [&]() -> Failure {
    const LaurentElem j = momentum_map(ctx);
    LSeries sj = s_apply(ctx.lift(j), ctx);
    for (int k = 0; k <= ctx.order(); ++k)
      if (!(sj[k] == j.times_xpow(-k) * Complex(ctx.d(k))))
        return "S J differs from D J at order " + std::to_string(k);
    for (const auto& c : {ctx, ctx.with_d({Rational(1)})})
      for (int i = 0; i < cases; ++i) {
        LSeries f = c.lift(rng.invariant(s, 2));
        if (auto e = series_zero(quantum_momentum_residual(f, c), "case " + std::to_string(i)))
          return e;
      }
    return std::nullopt;
  }));
  return rep;
}

Report check_moreno(int rmax) {
  Report rep;
  rep.add(timed("Moreno recursion", [&]() -> Failure {
    for (int r = 1; r <= rmax; ++r)
      if (!moreno_recursion_residual(r).is_zero())
        return "r = " + std::to_string(r) + ": " + moreno_recursion_residual(r).str();
    return std::nullopt;
  }));
  rep.add(timed("recursion coefficients vanish", [&]() -> Failure {
    for (int r = 2; r <= rmax; ++r)
      for (int s = 2; s <= r; ++s)
        if (auto e = rational_zero(coeff_vanishing(r, s),
                                   "r = " + std::to_string(r) + ", s = " + std::to_string(s)))
          return e;
    return std::nullopt;
  }));
  rep.add(timed("A recursion identity", [&]() -> Failure {
    for (int s = 1; s <= 8; ++s)
      for (int t = s; t <= 12; ++t)
        if (auto e = rational_zero(a_identity_check(s, t),
                                   "s = " + std::to_string(s) + ", t = " + std::to_string(t)))
          return e;
    return std::nullopt;
  }));
  rep.add(timed("Laplacian polynomials match the K table", [&]() -> Failure {
    for (int n = 1; n <= 3; ++n)
      for (int r = 1; r <= rmax; ++r) {
        UnivarPoly expected(UVar::delta);
        for (int s = 1; s <= r; ++s) expected += p_poly(s, n) * Complex(k_coeff(r, s));
        if (!(k_poly(r, n) == expected))
          return "n = " + std::to_string(n) + ", r = " + std::to_string(r);
      }
    return std::nullopt;
  }));
  return rep;
}

Report check_chart(int rmax, int cases, std::uint64_t seed) {
  Report rep;
  RandomSource rng(seed);
  const VarSpace s = VarSpace::euclidean(1);
  rep.add(timed("chart Laplacian reproduces M_r", [&]() -> Failure {
    std::vector<std::pair<ReducedFn, ReducedFn>> pairs;
    ReducedFn phi(LaurentElem::z(s, 0) * LaurentElem::zb(s, 0) * LaurentElem::x(s, -1));
    pairs.emplace_back(phi, phi);
    pairs.emplace_back(phi, ReducedFn(LaurentElem(s, Complex(1))));
    for (int i = 0; i < cases; ++i)
      pairs.emplace_back(ReducedFn(rng.homogeneous(s, 2)), ReducedFn(rng.homogeneous(s, 2)));
    for (std::size_t i = 0; i < pairs.size(); ++i)
      for (int r = 1; r <= rmax; ++r) {
        ChartElem res = chart_cross_check(pairs[i].first, pairs[i].second, r);
        if (!res.is_zero())
          return "pair " + std::to_string(i) + ", r = " + std::to_string(r) + ": " + res.str();
      }
    return std::nullopt;
  }));
  return rep;
}

Report check_product_formula(int rmax, int nmax, int cases, std::uint64_t seed) {
  Report rep;
  RandomSource rng(seed);
  rep.add(timed("two-point product formula", [&]() -> Failure {
    for (int n = 1; n <= nmax; ++n) {
      const VarSpace s = VarSpace::euclidean(n);
      for (int i = 0; i < cases; ++i) {
        LaurentElem f = rng.homogeneous(s, 2), g = rng.homogeneous(s, 2);
        for (int r = 1; r <= rmax; ++r)
          if (auto e = elem_zero(product_formula_residual(r, f, g),
                                 "n = " + std::to_string(n) + ", r = " + std::to_string(r)))
            return e;
      }
    }
    return std::nullopt;
  }));
  return rep;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"all", "lemma21", "equiv", "reduce", "moreno", "su1n"};
  return names;
}

namespace {

Report wick_identity_suite(const VarSpace& s, const SuiteConfig& cfg) {
  Report rep;
  rep.merge(check_wick_associativity(s, cfg.cases, 3, cfg.seed));
  rep.merge(check_commutator(s, cfg.cases, cfg.order, cfg.seed + 1));
  rep.merge(check_momentum_commutator(s, cfg.cases, cfg.order, cfg.seed + 2));
  rep.merge(check_wick_identities(s, cfg.cases, cfg.order, cfg.seed + 3));
  return rep;
}

Report reduce_suite(const StarContext& ctx, const SuiteConfig& cfg) {
  Report rep;
  rep.merge(check_mu_star(ctx, cfg.cases, cfg.seed + 10));
  rep.merge(check_triangle(ctx, cfg.cases, cfg.seed + 11));
  return rep;
}

}  // namespace

Report run_suite(const std::string& name, const SuiteConfig& cfg) {
  const StarContext ctx(cfg.space, cfg.order, {Rational(1)}, cfg.mu);
  const StarContext general = ctx.with_d(cfg.d);
  Report rep;
  const bool all = name == "all";
  if (all || name == "lemma21") rep.merge(wick_identity_suite(cfg.space, cfg));
  if (all || name == "equiv") {
    rep.merge(check_symbol(cfg.order, cfg.d));
    rep.merge(check_s_action(std::min(cfg.order, 4), cfg.d, 4));
    rep.merge(check_a_table(8));
    rep.merge(check_radial_equivalence(general, cfg.cases, cfg.seed + 4));
    rep.merge(check_tilde(general, cfg.cases, cfg.seed + 5));
    rep.merge(check_tilde_associativity(ctx, cfg.cases, cfg.seed + 6));
  }
  if (all || name == "reduce") {
    rep.merge(reduce_suite(ctx, cfg));
    rep.merge(check_k_table(cfg.rmax));
    rep.merge(check_remarks(general, cfg.cases, cfg.seed + 12));
  }
  if (all || name == "moreno") {
    rep.merge(check_moreno(cfg.rmax));
    rep.merge(check_chart(3, cfg.cases, cfg.seed + 20));
  }
  if (all || name == "su1n") {
    const VarSpace ind = VarSpace::indefinite(cfg.space.n());
    rep.merge(wick_identity_suite(ind, cfg));
    rep.merge(reduce_suite(ctx.with_space(ind), cfg));
  }
  if (all) rep.merge(check_product_formula(3, 2, cfg.cases, cfg.seed + 30));
  if (!all && std::find(suite_names().begin(), suite_names().end(), name) == suite_names().end())
    throw std::invalid_argument("unknown suite '" + name + "'");
  return rep;
}

}  // namespace cpstar
