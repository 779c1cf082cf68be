#include "cpstar/random.hpp"

#include <array>

namespace cpstar {

int RandomSource::uniform(int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng_);
}

Complex RandomSource::coeff() {
  static const std::array<Complex, 7> pool = {
      Complex(0),           Complex(1),  Complex(-1), Complex(Rational(1, 2)),
      Complex(Rational(-1, 2)), Complex::i(), -Complex::i()};
  return pool[static_cast<std::size_t>(uniform(0, static_cast<int>(pool.size()) - 1))];
}

Complex RandomSource::nonzero_coeff() {
  for (;;) {
    Complex c = coeff();
    if (!c.is_zero()) return c;
  }
}

Monomial RandomSource::random_monomial(const VarSpace& s, int hol, int antihol, int block) {
  Monomial m;
  for (int i = 0; i < hol; ++i) ++m[s.z(uniform(0, s.n()), block)];
  for (int i = 0; i < antihol; ++i) ++m[s.zb(uniform(0, s.n()), block)];
  return m;
}

LaurentElem RandomSource::polynomial(const VarSpace& s, int max_degree, int terms) {
  SparsePoly p(s.nvars());
  for (int t = 0; t < terms; ++t) {
    int deg = uniform(0, max_degree);
    int hol = uniform(0, deg);
    p.add_term(random_monomial(s, hol, deg - hol), coeff());
  }
  return {s, p};
}

UnivarPoly RandomSource::radial_poly(int max_degree) {
  std::vector<Complex> c;
  for (int k = 0; k <= max_degree; ++k) c.push_back(coeff());
  return {UVar::x, c};
}

LaurentElem RandomSource::radial(const VarSpace& s, int max_degree) {
  LaurentElem r(s);
  for (int k = 0; k <= max_degree; ++k) r += LaurentElem::x(s, k) * coeff();
  return r;
}

LaurentElem RandomSource::invariant(const VarSpace& s, int max_degree, int terms) {
  SparsePoly p(s.nvars());
  for (int t = 0; t < terms; ++t) {
    int a = uniform(0, max_degree);
    p.add_term(random_monomial(s, a, a), nonzero_coeff());
  }
  return {s, p, uniform(0, max_degree)};
}

LaurentElem RandomSource::homogeneous(const VarSpace& s, int max_degree, int terms) {
  int m = uniform(1, max_degree);
  SparsePoly p(s.nvars());
  for (int t = 0; t < terms; ++t) p.add_term(random_monomial(s, m, m), nonzero_coeff());
  return {s, p, m};
}

}  // namespace cpstar
