#include <gtest/gtest.h>

#include "cpstar/equiv.hpp"
#include "cpstar/random.hpp"
#include "cpstar/verify.hpp"
#include "cpstar/wick.hpp"
#include "support.hpp"

using namespace cpstar;
using cpstar::test::elem;
using cpstar::test::q;
using cpstar::test::series;

namespace {
const VarSpace E1 = VarSpace::euclidean(1);
const VarSpace E2 = VarSpace::euclidean(2);

SparsePoly xa(int ex, int ea, Complex c) {
  Monomial m;
  m[0] = static_cast<Monomial::Exp>(ex);
  m[1] = static_cast<Monomial::Exp>(ea);
  return SparsePoly::monomial(2, m, c);
}

XSeries xs(std::vector<SparsePoly> c) { return XSeries(std::move(c)); }
}  // namespace

TEST(ACoeff, Values) {
  EXPECT_EQ(a_coeff(0, 0), Rational(1));
  for (int s = 1; s <= 6; ++s) EXPECT_EQ(a_coeff(0, s), Rational(0));
  for (int s = 0; s <= 8; ++s) {
    Rational sign = s % 2 ? Rational(-1) : Rational(1);
    EXPECT_EQ(a_coeff(1, s), sign);
    EXPECT_EQ(a_coeff(2, s), sign * (Rational(2).pow(s + 1) - Rational(1)));
  }
  EXPECT_EQ(a_coeff(2, 2), Rational(7));
  EXPECT_THROW(a_coeff(-1, 0), std::invalid_argument);
}

TEST(ACoeff, AgreesWithIndependentOracles) {
  for (int r = 1; r <= 8; ++r)
    for (int s = 0; s <= 8; ++s) {
      EXPECT_EQ(a_coeff(r, s), a_coeff_by_inversion(r, s)) << r << "," << s;
      EXPECT_EQ(a_coeff(r, s), a_coeff_by_partial_fractions(r, s)) << r << "," << s;
    }
}

TEST(Symbol, TrivialD) {
  auto s = symbol(StarContext(E1, 2));
  ASSERT_EQ(s.order(), 2);
  EXPECT_EQ(s[0], SparsePoly(2, Complex(1)));
  EXPECT_EQ(s[1], xa(1, 2, q(-1, 2)));
  EXPECT_EQ(s[2], xa(1, 3, q(1, 3)) + xa(2, 4, q(1, 8)));
}

TEST(Symbol, UnitAtZeroAndConstantTerm) {
  for (auto d : {std::vector<Rational>{1}, {1, 1}, {1, Rational(1, 2), -3}}) {
    auto s = symbol(StarContext(E1, 5, d));
    EXPECT_EQ(s[0], SparsePoly(2, Complex(1)));
    for (int k = 1; k <= 5; ++k)
      EXPECT_TRUE(s[k].substitute(1, SparsePoly(2)).is_zero()) << k;
  }
}

TEST(Symbol, FunctionalEquation) {
  EXPECT_TRUE(functional_equation_residual(StarContext(E1, 6)).is_zero());
  EXPECT_TRUE(functional_equation_residual(StarContext(E1, 4, {1, 1})).is_zero());
}

TEST(SAction, Powers) {
  StarContext c(E1, 2);
  EXPECT_EQ(s_apply_xpow(0, c), XSeries::constant(2, xmono(0)));
  EXPECT_EQ(s_apply_xpow(1, c), XSeries::constant(2, xmono(1)));
  EXPECT_EQ(s_apply_xpow(2, c), xs({xmono(2), xmono(1, -1), SparsePoly(1)}));
  EXPECT_EQ(s_apply_xpow(-1, c), xs({xmono(-1), xmono(-2, -1), xmono(-3)}));
  // D = 1 + l/x: S x = D x = x + l
  EXPECT_EQ(s_apply_xpow(1, c.with_d({1, 1})), xs({xmono(1), xmono(0), SparsePoly(1)}));
}

TEST(SAction, StandardOrderingAgrees) {
  for (auto d : {std::vector<Rational>{1}, {1, 1}})
    for (int j = -4; j <= 4; ++j) {
      StarContext c(E1, 4, d);
      EXPECT_EQ(s_apply_xpow(j, c), s_standard_ordered_xpow(j, c)) << j;
    }
}

TEST(SAction, InvariantSeries) {
  StarContext c(E1, 3);
  LSeries phi = series("z0*zb1/x", E1, 3);
  EXPECT_EQ(s_apply(phi, c), phi);
  EXPECT_EQ(s_apply(phi, c, true), phi);
  EXPECT_EQ(s_apply(series("x", E1, 3), c), series("x", E1, 3));
  EXPECT_EQ(s_apply(series("x^2", E1, 3), c), series("x^2 - l*x", E1, 3));
  EXPECT_EQ(s_apply(series("z0*zb0*x", E1, 3), c), series("z0*zb0*x - l*z0*zb0", E1, 3));
  EXPECT_THROW(s_apply(series("z0", E1, 3), c), MathError);
}

TEST(SAction, RoundTrip) {
  RandomSource rng(31);
  for (auto d : {std::vector<Rational>{1}, {1, 1}}) {
    StarContext c(E2, 4, d);
    for (int t = 0; t < 10; ++t) {
      LSeries f = c.zero_series();
      for (int k = 0; k <= 4; ++k) f[k] = rng.invariant(E2, 2);
      EXPECT_EQ(s_apply(s_apply(f, c), c, true), f);
      EXPECT_EQ(s_apply(s_apply(f, c, true), c), f);
    }
  }
}

TEST(Equivalence, Radial) {
  StarContext c(E1, 4);
  auto x = UnivarPoly::monomial(UVar::x, 1), x2 = UnivarPoly::monomial(UVar::x, 2);
  EXPECT_TRUE(equivalence_residual(UnivarPoly::constant(UVar::x, 1), x2, c).is_zero());
  EXPECT_TRUE(equivalence_residual(x, x, c).is_zero());
  EXPECT_TRUE(equivalence_residual(x2, x, c).is_zero());
  EXPECT_TRUE(equivalence_residual(x2, x2, c.with_d({1, 1})).is_zero());
}

TEST(TildeStar, PointwiseRelations) {
  StarContext c(E1, 3);
  LSeries x = series("x", E1, 3);
  LSeries phi = series("z0*zb0/x", E1, 3);
  EXPECT_EQ(tilde_star(x, x, c), series("x^2", E1, 3));
  EXPECT_EQ(tilde_star(x, phi, c), series("z0*zb0", E1, 3));
  EXPECT_EQ(tilde_star(phi, x, c), series("z0*zb0", E1, 3));
  LSeries f = series("z0*zb1*x + z1*zb1", E1, 3);
  EXPECT_EQ(tilde_star(x, f, c), x * f);
}

TEST(TildeStar, FirstOrderOnPhi) {
  StarContext c(E1, 1);
  LaurentElem phi = elem("z0*zb0/x", E1);
  LSeries p = tilde_star(c.lift(phi), c.lift(phi), c);
  EXPECT_EQ(p[0], phi * phi);
  EXPECT_EQ(p[1], (phi - phi * phi) * LaurentElem::x(E1, -1));
  EXPECT_EQ(tilde_star_homogeneous(phi, phi, c), p);
}

TEST(TildeStar, ClosedFormulaMatchesConjugation) {
  RandomSource rng(17);
  for (auto d : {std::vector<Rational>{1}, {1, 1}}) {
    StarContext c(E2, 4, d);
    for (int t = 0; t < 4; ++t) {
      LaurentElem f = rng.homogeneous(E2, 2), g = rng.homogeneous(E2, 1);
      EXPECT_EQ(tilde_star(c.lift(f), c.lift(g), c), tilde_star_homogeneous(f, g, c));
    }
  }
  EXPECT_THROW(tilde_star_homogeneous(elem("x", E1), elem("1", E1), StarContext(E1, 2)),
               MathError);
}

TEST(TildeStar, Suites) {
  StarContext c(E1, 4);
  for (const Report& r : {check_tilde(c, 3, 5), check_tilde_associativity(c, 2, 5),
                          check_radial_equivalence(c, 5, 5)})
    for (const auto& k : r.checks()) EXPECT_TRUE(k.passed) << k.name << ": " << k.detail;
}
