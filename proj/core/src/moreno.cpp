#include "cpstar/moreno.hpp"

#include <algorithm>
#include <stdexcept>

#include "cpstar/equiv.hpp"
#include "cpstar/wick.hpp"

namespace cpstar {

UnivarPoly p_poly(int r, int n) {
  if (r < 0) throw std::invalid_argument("p_r needs r >= 0");
  UnivarPoly p = UnivarPoly::constant(UVar::delta, 1);
  for (int k = 0; k < r; ++k)
    p *= UnivarPoly(UVar::delta, {Complex(Rational(k * (k - n))), Complex(1)});
  return p;
}

UnivarPoly k_poly(int r, int n) {
  UnivarPoly k(UVar::delta);
  for (int t = 1; t <= r; ++t)
    k += p_poly(t, n) * Complex(a_coeff(t, r - t) / factorial(static_cast<unsigned>(t)));
  return k;
}

UnivarPoly moreno_recursion_residual(int r) {
  if (r < 1) throw std::invalid_argument("recursion index starts at 1");
  UnivarPoly bracket = UnivarPoly::monomial(UVar::delta, 1) * k_poly(r, 1);
  for (int s = 0; s <= r - 1; ++s) {
    Rational c = factorial(static_cast<unsigned>(r)) * Rational(r + 3 + s) /
                 (factorial(static_cast<unsigned>(s + 2)) *
                  factorial(static_cast<unsigned>(r - 1 - s)));
    bracket -= k_poly(r - s, 1) * Complex(c);
  }
  return k_poly(r + 1, 1) * Complex(r + 1) - bracket;
}

namespace {

/// A^(r)_s extended by A^(0)_s = delta_{s0}.
Rational a_ext(int r, int s) {
  if (s < 0) return Rational(0);
  if (r == 0) return Rational(s == 0 ? 1 : 0);
  return a_coeff(r, s);
}

}  // namespace

Rational coeff_vanishing(int r, int s) {
  if (s < 2 || s > r) throw std::invalid_argument("coefficient check needs 2 <= s <= r");
  Rational sum(0);
  for (int t = s; t <= r; ++t)
    sum += (binomial(r + 1, t - 1) + binomial(r, t - 1)) * a_ext(s, t - s);
  return a_ext(s, r + 1 - s) + sum / Rational(r + 1) -
         Rational(s, r + 1) * (a_ext(s - 1, r + 1 - s) - Rational(s - 1) * a_ext(s, r - s));
}

Rational a_identity_check(int s, int t) {
  if (s < 1 || t < s) throw std::invalid_argument("identity check needs 1 <= s <= t");
  return a_ext(s, t + 1 - s) - (a_ext(s - 1, t + 1 - s) - Rational(s) * a_ext(s, t - s));
}

ChartElem::ChartElem(int n) : ChartElem(n, SparsePoly(static_cast<std::size_t>(4 * n))) {}

ChartElem::ChartElem(int n, SparsePoly numerator, Exponents denominator)
    : n_(n), num_(std::move(numerator)), den_(denominator) {
  if (n < 1 || 4 * n > static_cast<int>(kMaxVars)) throw std::invalid_argument("chart dimension out of range");
  if (num_.nvars() != static_cast<std::size_t>(4 * n))
    throw std::invalid_argument("chart numerator has the wrong variable count");
  for (int e : den_)
    if (e < 0) throw std::invalid_argument("chart denominators carry non-negative exponents");
  if (num_.is_zero()) den_ = {0, 0, 0, 0};
}

SparsePoly ChartElem::factor(int i) const {
  const std::size_t nv = num_.nvars();
  SparsePoly f(nv, Complex(1));
  for (int k = 0; k < n_; ++k) {
    std::size_t a = 0, b = 0;
    switch (i) {
      case 0: a = u(k), b = vb(k); break;
      case 1: a = v(k), b = ub(k); break;
      case 2: a = u(k), b = ub(k); break;
      default: a = v(k), b = vb(k); break;
    }
    f += SparsePoly::variable(nv, a) * SparsePoly::variable(nv, b);
  }
  return f;
}

SparsePoly ChartElem::lifted(const Exponents& target) const {
  SparsePoly p = num_;
  for (int i = 0; i < 4; ++i) {
    int e = target[static_cast<std::size_t>(i)] - den_[static_cast<std::size_t>(i)];
    if (e > 0) p *= factor(i).pow(static_cast<unsigned>(e));
  }
  return p;
}

namespace {

ChartElem::Exponents max_exponents(const ChartElem::Exponents& a, const ChartElem::Exponents& b) {
  ChartElem::Exponents m{};
  for (std::size_t i = 0; i < 4; ++i) m[i] = std::max(a[i], b[i]);
  return m;
}

}  // namespace

ChartElem& ChartElem::operator+=(const ChartElem& o) {
  if (o.n_ != n_) throw std::invalid_argument("chart dimensions differ");
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  Exponents m = max_exponents(den_, o.den_);
  *this = ChartElem(n_, lifted(m) + o.lifted(m), m);
  return *this;
}

ChartElem& ChartElem::operator-=(const ChartElem& o) { return *this += o * Complex(-1); }

ChartElem operator*(const ChartElem& a, const ChartElem& b) {
  if (a.n_ != b.n_) throw std::invalid_argument("chart dimensions differ");
  ChartElem::Exponents e{};
  for (std::size_t i = 0; i < 4; ++i) e[i] = a.den_[i] + b.den_[i];
  return {a.n_, a.num_ * b.num_, e};
}

ChartElem operator*(ChartElem a, const Complex& c) {
  return {a.n_, a.num_ * c, a.den_};
}

ChartElem ChartElem::diff(std::size_t var) const {
  ChartElem out(n_, num_.diff(var), den_);
  for (int i = 0; i < 4; ++i) {
    int e = den_[static_cast<std::size_t>(i)];
    if (e == 0) continue;
    SparsePoly df = factor(i).diff(var);
    if (df.is_zero()) continue;
    Exponents bumped = den_;
    ++bumped[static_cast<std::size_t>(i)];
    out += ChartElem(n_, num_ * df * Complex(-e), bumped);
  }
  return out;
}

ChartElem ChartElem::diagonal() const {
  std::vector<std::size_t> perm(static_cast<std::size_t>(4 * n_));
  for (int k = 0; k < n_; ++k) {
    perm[u(k)] = v(k);
    perm[ub(k)] = vb(k);
    perm[v(k)] = v(k);
    perm[vb(k)] = vb(k);
  }
  int total = den_[0] + den_[1] + den_[2] + den_[3];
  return {n_, num_.remapped(perm, num_.nvars()), {0, 0, 0, total}};
}

ChartElem ChartElem::laplacian() const {
  const std::size_t nv = num_.nvars();
  ChartElem sum(n_);
  for (int k = 0; k < n_; ++k) {
    ChartElem dk = diff(u(k));
    for (int l = 0; l < n_; ++l) {
      SparsePoly c = SparsePoly::variable(nv, u(k)) * SparsePoly::variable(nv, ub(l));
      if (k == l) c += SparsePoly(nv, Complex(1));
      sum += ChartElem(n_, c) * dk.diff(ub(l));
    }
  }
  return ChartElem(n_, factor(2)) * sum;
}

bool ChartElem::equals(const ChartElem& o) const {
  if (o.n_ != n_) return false;
  Exponents m = max_exponents(den_, o.den_);
  return lifted(m) == o.lifted(m);
}

std::string ChartElem::str() const {
  std::string s = "numerator with " + std::to_string(num_.size()) + " terms over D^(";
  for (std::size_t i = 0; i < 4; ++i) s += (i ? "," : "") + std::to_string(den_[i]);
  return s + ")";
}

namespace {

enum class Slot { u, ub, v, vb };

/// Substitutes z0 = zb0 = 1 and sends z^k, zb^k (k >= 1) to the given chart
/// slots; the x-power becomes the exponent of `x_factor`.
ChartElem chart_image(const ReducedFn& f, Slot hol, Slot antihol, int x_factor) {
  const VarSpace& s = f.space();
  if (!s.is_euclidean()) throw std::invalid_argument("the chart check uses the Euclidean metric");
  const int n = s.n();
  ChartElem probe(n);
  auto slot = [&](Slot which, int k) {
    switch (which) {
      case Slot::u: return probe.u(k);
      case Slot::ub: return probe.ub(k);
      case Slot::v: return probe.v(k);
      default: return probe.vb(k);
    }
  };
  SparsePoly out(static_cast<std::size_t>(4 * n));
  for (const auto& [m, c] : f.rep().numerator().terms()) {
    Monomial cm;
    for (int k = 1; k <= n; ++k) {
      cm[slot(hol, k - 1)] = m[s.z(k)];
      cm[slot(antihol, k - 1)] = m[s.zb(k)];
    }
    out.add_term(cm, c);
  }
  ChartElem::Exponents den{0, 0, 0, 0};
  den[static_cast<std::size_t>(x_factor)] = f.rep().xpow();
  return {n, std::move(out), den};
}

}  // namespace

ChartElem to_chart(const ReducedFn& f) { return chart_image(f, Slot::v, Slot::vb, 3); }
ChartElem continue_left(const ReducedFn& f) { return chart_image(f, Slot::u, Slot::vb, 0); }
ChartElem continue_right(const ReducedFn& f) { return chart_image(f, Slot::v, Slot::ub, 1); }

ChartElem chart_cross_check(const ReducedFn& phi, const ReducedFn& psi, int r) {
  if (r < 1) throw std::invalid_argument("chart check needs r >= 1");
  const int n = phi.space().n();
  ChartElem w = continue_left(phi) * continue_right(psi);
  for (int k = 0; k < r; ++k) {
    ChartElem next = w.laplacian();
    if (k * (k - n) != 0) next += w * Complex(Rational(k * (k - n)));
    w = std::move(next);
  }
  ChartElem local = w.diagonal();
  ChartElem homogeneous = to_chart(ReducedFn(bidiff_m(phi.rep(), psi.rep(), r)));
  return local - homogeneous;
}

}  // namespace cpstar
