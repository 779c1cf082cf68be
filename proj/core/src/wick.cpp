#include "cpstar/wick.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cpstar {

namespace {

using MultiIndex = std::vector<int>;

void multi_indices(int dim, int total, std::vector<MultiIndex>& out, MultiIndex& cur, int pos) {
  if (pos == dim - 1) {
    cur[static_cast<std::size_t>(pos)] = total;
    out.push_back(cur);
    return;
  }
  for (int k = total; k >= 0; --k) {
    cur[static_cast<std::size_t>(pos)] = k;
    multi_indices(dim, total - k, out, cur, pos + 1);
  }
}

std::vector<MultiIndex> multi_indices(int dim, int total) {
  std::vector<MultiIndex> out;
  MultiIndex cur(static_cast<std::size_t>(dim), 0);
  multi_indices(dim, total, out, cur, 0);
  return out;
}

/// Derivatives in first-block variables of num * x^-m, kept as raw numerators.
class RawDerivatives {
 public:
  explicit RawDerivatives(const LaurentElem& e) : space_(e.space()), m_(e.xpow()) {}
  /// Raw x-power of an order-r derivative.
  int xpow(int r) const { return m_ == 0 ? 0 : m_ + r; }
  SparsePoly step(const SparsePoly& num, int order, std::size_t var) const {
    if (num.is_zero()) return num;
    if (m_ == 0) return num.diff(var);
    return quotient_rule_numerator(num, xpow(order), var, space_);
  }

 private:
  const VarSpace& space_;
  int m_;
};

void require_same_space(const LaurentElem& f, const LaurentElem& g) {
  if (!(f.space() == g.space())) throw std::invalid_argument("arguments live in different spaces");
}

}  // namespace

std::vector<LaurentElem> wick_terms(const LaurentElem& f, const LaurentElem& g, int rmax) {
  require_same_space(f, g);
  const VarSpace& s = f.space();
  const int dim = s.dim();
  std::vector<LaurentElem> out(static_cast<std::size_t>(rmax) + 1, LaurentElem(s));
  out[0] = f * g;
  if (f.is_zero() || g.is_zero()) return out;
  // derivatives of order r share the raw x-power xpow + r (unchanged for polynomials)
  RawDerivatives df(f), dg(g);
  std::map<MultiIndex, SparsePoly> nf_prev{{MultiIndex(static_cast<std::size_t>(dim), 0), f.numerator()}};
  std::map<MultiIndex, SparsePoly> ng_prev{{MultiIndex(static_cast<std::size_t>(dim), 0), g.numerator()}};
  for (int r = 1; r <= rmax; ++r) {
    std::map<MultiIndex, SparsePoly> nf, ng;
    bool any_f = false, any_g = false;
    SparsePoly sum(s.nvars());
    for (const MultiIndex& a : multi_indices(dim, r)) {
      // derive from the parent obtained by lowering the first nonzero slot
      auto first = static_cast<std::size_t>(
          std::find_if(a.begin(), a.end(), [](int e) { return e > 0; }) - a.begin());
      MultiIndex parent = a;
      --parent[first];
      SparsePoly fa = df.step(nf_prev.at(parent), r - 1, s.z(static_cast<int>(first)));
      SparsePoly ga = dg.step(ng_prev.at(parent), r - 1, s.zb(static_cast<int>(first)));
      any_f = any_f || !fa.is_zero();
      any_g = any_g || !ga.is_zero();
      if (!fa.is_zero() && !ga.is_zero()) {
        Rational w(1);
        for (int k = 0; k < dim; ++k) {
          int e = a[static_cast<std::size_t>(k)];
          w /= factorial(static_cast<unsigned>(e));
          if (s.g(k) < 0 && e % 2 == 1) w = -w;
        }
        sum += fa * ga * Complex(w);
      }
      nf.emplace(a, std::move(fa));
      ng.emplace(a, std::move(ga));
    }
    out[static_cast<std::size_t>(r)] =
        LaurentElem(s, std::move(sum), df.xpow(r) + dg.xpow(r), f.xpow(1) + g.xpow(1));
    if (!any_f || !any_g) break;
    nf_prev = std::move(nf);
    ng_prev = std::move(ng);
  }
  return out;
}

LSeries wick_product(const LSeries& f, const LSeries& g, const StarContext& ctx) {
  int K = std::min({ctx.order(), f.order(), g.order()});
  LSeries out(K, ctx.zero());
  for (int i = 0; i <= K; ++i) {
    if (f[i].is_zero()) continue;
    for (int j = 0; i + j <= K; ++j) {
      if (g[j].is_zero()) continue;
      auto terms = wick_terms(f[i], g[j], K - i - j);
      for (int r = 0; i + j + r <= K; ++r) out[i + j + r] += terms[static_cast<std::size_t>(r)];
    }
  }
  return out;
}

LSeries wick_product(const LaurentElem& f, const LaurentElem& g, const StarContext& ctx) {
  return wick_product(ctx.lift(f), ctx.lift(g), ctx);
}

LaurentElem poisson(const LaurentElem& f, const LaurentElem& g) {
  require_same_space(f, g);
  const VarSpace& s = f.space();
  LaurentElem sum(s);
  for (int k = 0; k <= s.n(); ++k) {
    LaurentElem t = f.diff(s.z(k)) * g.diff(s.zb(k)) - f.diff(s.zb(k)) * g.diff(s.z(k));
    sum += t * Complex(s.g(k));
  }
  return sum * Complex(Rational(0), Rational(-2));  // 2/i
}

LSeries commutator_residual(const LaurentElem& f, const LaurentElem& g, const StarContext& ctx) {
  LSeries res = wick_product(f, g, ctx) - wick_product(g, f, ctx);
  res -= LSeries::monomial(res.order(), 1,
                           poisson(f, g) * Complex(Rational(0), Rational(1, 2)));
  return res;
}

LaurentElem bidiff_m(const LaurentElem& f, const LaurentElem& g, int r) {
  require_same_space(f, g);
  if (r < 0) throw std::invalid_argument("M_r needs r >= 0");
  const VarSpace& s = f.space();
  if (r == 0) return f * g;
  RawDerivatives rf(f), rg(g);
  std::map<std::vector<int>, SparsePoly> memo_f{{{}, f.numerator()}}, memo_g{{{}, g.numerator()}};
  // memoized derivative along a sorted tuple, built from its sorted prefix
  auto derivative = [&](auto& memo, const RawDerivatives& raw, const std::vector<int>& sorted,
                        bool bar, auto& self) -> const SparsePoly& {
    auto it = memo.find(sorted);
    if (it != memo.end()) return it->second;
    std::vector<int> prefix(sorted.begin(), sorted.end() - 1);
    const SparsePoly& p = self(memo, raw, prefix, bar, self);
    int k = sorted.back();
    SparsePoly d = raw.step(p, static_cast<int>(prefix.size()), bar ? s.zb(k) : s.z(k));
    return memo.emplace(sorted, std::move(d)).first->second;
  };
  SparsePoly sum(s.nvars());
  std::vector<int> tuple(static_cast<std::size_t>(r), 0);
  const int dim = s.dim();
  while (true) {
    std::vector<int> sorted = tuple;
    std::sort(sorted.begin(), sorted.end());
    const SparsePoly& a = derivative(memo_f, rf, sorted, false, derivative);
    const SparsePoly& b = derivative(memo_g, rg, sorted, true, derivative);
    if (!a.is_zero() && !b.is_zero()) {
      int sign = 1;
      for (int k : tuple) sign *= s.g(k);
      sum += a * b * Complex(sign);
    }
    int pos = r - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == dim - 1) {
      tuple[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<std::size_t>(pos)];
  }
  return LaurentElem(s, std::move(sum), rf.xpow(r) + rg.xpow(r) - r, f.xpow(1) + g.xpow(1));
}

LaurentElem d_dx(const LaurentElem& f) {
  if (!f.is_u1_invariant()) throw MathError("d/dx is only realized on U(1)-invariant elements");
  LaurentElem e = f.euler(EulerOp::E) + f.euler(EulerOp::Ebar);
  return e.times_xpow(-1) * Complex(Rational(1, 2));
}

LaurentElem radial_to_laurent(const UnivarPoly& rho, const VarSpace& space) {
  if (rho.var() != UVar::x) throw std::invalid_argument("radial functions are polynomials in x");
  LaurentElem out(space);
  for (int k = 0; k <= rho.degree(); ++k)
    if (!rho[static_cast<std::size_t>(k)].is_zero())
      out += LaurentElem::x(space, k) * rho[static_cast<std::size_t>(k)];
  return out;
}

Series<UnivarPoly> radial_star(const UnivarPoly& rho1, const UnivarPoly& rho2,
                               const StarContext& ctx) {
  Series<UnivarPoly> out(ctx.order(), UnivarPoly(UVar::x));
  for (int r = 0; r <= ctx.order(); ++r) {
    UnivarPoly a = rho1.derivative(static_cast<unsigned>(r));
    UnivarPoly b = rho2.derivative(static_cast<unsigned>(r));
    if (a.is_zero() || b.is_zero()) break;
    out[r] = UnivarPoly::monomial(UVar::x, static_cast<unsigned>(r),
                                  Complex(Rational(1) / factorial(static_cast<unsigned>(r)))) *
             a * b;
  }
  return out;
}

namespace {

UnivarPoly exp_poly(const Rational& a, int max_xdeg) {
  std::vector<Complex> c(static_cast<std::size_t>(max_xdeg) + 1);
  for (int j = 0; j <= max_xdeg; ++j)
    c[static_cast<std::size_t>(j)] = Complex(a.pow(j) / factorial(static_cast<unsigned>(j)));
  return {UVar::x, std::move(c)};
}

}  // namespace

Series<UnivarPoly> exp_symbol_residual(const Rational& alpha, const Rational& beta,
                                       const StarContext& ctx, int max_xdeg) {
  UnivarPoly ea = exp_poly(alpha, max_xdeg), eb = exp_poly(beta, max_xdeg);
  Series<UnivarPoly> lhs = radial_star(ea, eb, ctx);
  for (int k = 0; k <= lhs.order(); ++k) lhs[k] = lhs[k].truncated_degree(max_xdeg);
  // exp((a+b)x) exp(l a b x) = sum_k l^k (a b x)^k / k! exp((a+b)x)
  UnivarPoly eab = exp_poly(alpha + beta, max_xdeg);
  Series<UnivarPoly> rhs(ctx.order(), UnivarPoly(UVar::x));
  Rational ab = alpha * beta;
  for (int k = 0; k <= ctx.order(); ++k) {
    UnivarPoly mono = UnivarPoly::monomial(
        UVar::x, static_cast<unsigned>(k), Complex(ab.pow(k) / factorial(static_cast<unsigned>(k))));
    rhs[k] = (mono * eab).truncated_degree(max_xdeg);
  }
  return lhs - rhs;
}

namespace {

const VarSpace& require_two_point(const LaurentElem& f) {
  if (!f.space().two_point()) throw std::invalid_argument("operator needs the two-point space");
  return f.space();
}

LaurentElem xi(const VarSpace& s) {
  LaurentElem out(s);
  for (int i = 0; i <= s.n(); ++i)
    out += LaurentElem::z(s, i, 0) * LaurentElem::zb(s, i, 1) * Complex(s.g(i));
  return out;
}

LaurentElem apply_p(const LaurentElem& f) {
  const VarSpace& s = f.space();
  if (f.is_zero()) return f;
  // every term carries the raw powers x^-(m+1) xw^-(p+1) (unraised when zero)
  const int m = f.xpow(0), p = f.xpow(1);
  SparsePoly sum(s.nvars());
  for (int j = 0; j <= s.n(); ++j) {
    SparsePoly d = m == 0 ? f.numerator().diff(s.z(j, 0))
                          : quotient_rule_numerator(f.numerator(), m, s.z(j, 0), s);
    if (d.is_zero()) continue;
    d = p == 0 ? d.diff(s.zb(j, 1)) : quotient_rule_numerator(d, p, s.zb(j, 1), s);
    sum += d * Complex(s.g(j));
  }
  return {s, std::move(sum), m == 0 ? 0 : m + 1, p == 0 ? 0 : p + 1};
}

}  // namespace

LaurentElem twopoint_n(const LaurentElem& f) {
  const VarSpace& s = require_two_point(f);
  return xi(s) * apply_p(f);
}

LaurentElem twopoint_m(const LaurentElem& f, int r) {
  const VarSpace& s = require_two_point(f);
  if (r < 0) throw std::invalid_argument("r must be >= 0");
  LaurentElem p = f;
  for (int k = 0; k < r && !p.is_zero(); ++k) p = apply_p(p);
  return xi(s).pow(r) * p;
}

LaurentElem twopoint_h(const LaurentElem& f) {
  require_two_point(f);
  return f.euler(EulerOp::Hfull);
}

LaurentElem product_formula_residual(int r, const LaurentElem& f, const LaurentElem& g) {
  if (!f.is_homogeneous() || !g.is_homogeneous())
    throw MathError("product formula check needs homogeneous arguments");
  LaurentElem fg = tensor(f, g);
  const int n = f.space().n();
  LaurentElem lhs = twopoint_m(fg, r).diagonal();
  LaurentElem acc = fg;
  for (int s = 0; s < r; ++s) acc = twopoint_n(acc) - acc * Complex(s * (n - s));
  return lhs - acc.diagonal();
}

}  // namespace cpstar
