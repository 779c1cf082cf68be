#include <gtest/gtest.h>

#include "cpstar/random.hpp"
#include "cpstar/verify.hpp"
#include "cpstar/wick.hpp"
#include "support.hpp"

using namespace cpstar;
using cpstar::test::elem;
using cpstar::test::series;

namespace {
const VarSpace E1 = VarSpace::euclidean(1);
const VarSpace E2 = VarSpace::euclidean(2);
const VarSpace I1 = VarSpace::indefinite(1);
const StarContext C1(E1, 4);

LSeries wick(const std::string& a, const std::string& b, const StarContext& ctx) {
  return wick_product(elem(a, ctx.space()), elem(b, ctx.space()), ctx);
}
}  // namespace

TEST(Wick, SpecExamples) {
  EXPECT_EQ(wick("z0", "zb0", C1), series("z0*zb0 + l", E1, 4));
  EXPECT_EQ(wick("z0", "zb1", C1), series("z0*zb1", E1, 4));
  EXPECT_EQ(wick("zb1", "z0", C1), series("zb1*z0", E1, 4));
  EXPECT_EQ(wick("x", "x", C1), series("x^2 + l*x", E1, 4));
  EXPECT_EQ(wick("x", "x^3", C1), series("x^4 + 3*l*x^3", E1, 4));
  StarContext ci(I1, 4);
  EXPECT_EQ(wick("z0", "zb0", ci), series("z0*zb0 - l", I1, 4));
  EXPECT_EQ(wick("z1", "zb1", ci), series("z1*zb1 + l", I1, 4));
}

TEST(Wick, TruncationAtContextOrder) {
  LSeries p = wick("z0^3", "zb0^3", StarContext(E1, 2));
  EXPECT_EQ(p.order(), 2);
  EXPECT_EQ(p, series("z0^3*zb0^3 + 9*l*z0^2*zb0^2 + 18*l^2*z0*zb0", E1, 2));
  LSeries full = wick("z0^3", "zb0^3", C1);
  EXPECT_EQ(full[3], elem("6", E1));
}

TEST(Wick, Poisson) {
  Complex m2i(Rational(0), Rational(-2));
  EXPECT_EQ(poisson(elem("z0", E1), elem("zb0", E1)), LaurentElem(E1, m2i));
  EXPECT_TRUE(poisson(elem("z0", E1), elem("zb1", E1)).is_zero());
  EXPECT_TRUE(poisson(elem("x", E1), elem("z0*zb0", E1)).is_zero());
  LaurentElem f = elem("z0*zb1/x + z1", E1);
  EXPECT_TRUE(poisson(f, f).is_zero());
}

TEST(Wick, CommutatorResidual) {
  EXPECT_TRUE(commutator_residual(elem("z0", E1), elem("zb0", E1), C1).is_zero());
  EXPECT_TRUE(commutator_residual(elem("x", E1), elem("z0*zb0", E1), C1)[1].is_zero());
  LaurentElem f = elem("z0*zb1^2 + i*z1", E1);
  EXPECT_TRUE(commutator_residual(f, f, C1).is_zero());
}

TEST(Wick, BidiffM) {
  LaurentElem phi = elem("z0*zb0/x", E1);
  EXPECT_EQ(bidiff_m(phi, phi, 0), phi * phi);
  EXPECT_EQ(bidiff_m(phi, phi, 1), phi - phi * phi);
  EXPECT_TRUE(bidiff_m(LaurentElem(E1, Complex(1)), phi, 2).is_zero());
  EXPECT_TRUE(bidiff_m(phi, LaurentElem(E1, Complex(1)), 1).is_zero());
}

TEST(Wick, MultiIndexAndOrderedTupleRoutesAgree) {
  RandomSource rng(21);
  for (const VarSpace& s : {E1, E2, I1}) {
    for (int t = 0; t < 10; ++t) {
      LaurentElem f = rng.invariant(s, 2), g = rng.polynomial(s, 3);
      auto terms = wick_terms(f, g, 3);
      for (int r = 0; r <= 3; ++r)
        EXPECT_EQ(terms[static_cast<std::size_t>(r)],
                  bidiff_m(f, g, r).times_xpow(-r) *
                      Complex(Rational(1) / factorial(static_cast<unsigned>(r))));
    }
  }
}

TEST(Wick, RadialStar) {
  StarContext c(E1, 3);
  UnivarPoly x = UnivarPoly::monomial(UVar::x, 1), x2 = UnivarPoly::monomial(UVar::x, 2);
  auto xx = radial_star(x, x, c);
  EXPECT_EQ(xx[0], x2);
  EXPECT_EQ(xx[1], x);
  EXPECT_TRUE(xx[2].is_zero());
  auto one = radial_star(UnivarPoly::constant(UVar::x, 1), x2, c);
  EXPECT_EQ(one[0], x2);
  EXPECT_TRUE(one[1].is_zero());
  auto x2x2 = radial_star(x2, x2, c);
  EXPECT_EQ(x2x2[0], UnivarPoly::monomial(UVar::x, 4));
  EXPECT_EQ(x2x2[1], UnivarPoly::monomial(UVar::x, 3, Complex(4)));
  EXPECT_EQ(x2x2[2], UnivarPoly::monomial(UVar::x, 2, Complex(2)));
}

TEST(Wick, ExponentialSymbols) {
  StarContext c(E1, 3);
  for (auto [a, b] : {std::pair{0, 3}, {1, 1}, {1, -1}, {2, -1}})
    EXPECT_TRUE(exp_symbol_residual(Rational(a), Rational(b), c, 8).is_zero()) << a << "," << b;
}

TEST(Wick, DdxOnInvariants) {
  EXPECT_EQ(d_dx(elem("x^3", E1)), elem("3*x^2", E1));
  EXPECT_TRUE(d_dx(elem("z0*zb1/x", E1)).is_zero());
  EXPECT_EQ(d_dx(elem("z0*zb0", E1)), elem("z0*zb0/x", E1));
  EXPECT_THROW(d_dx(elem("z0", E1)), MathError);
}

TEST(TwoPoint, Operators) {
  LaurentElem phi = elem("z0*zb0/x", E1);
  LaurentElem fg = tensor(phi, phi);
  EXPECT_EQ(twopoint_m(fg, 1).diagonal(), bidiff_m(phi, phi, 1));
  EXPECT_EQ(twopoint_n(fg), twopoint_m(fg, 1));
  EXPECT_EQ(twopoint_m(fg, 0), fg);
  EXPECT_TRUE(twopoint_h(fg).is_zero());
  EXPECT_EQ(twopoint_h(tensor(elem("z0", E1), elem("zb1^2", E1))),
            tensor(elem("3*z0", E1), elem("zb1^2", E1)));
  EXPECT_THROW(twopoint_n(phi), std::invalid_argument);
  EXPECT_THROW(twopoint_m(fg, -1), std::invalid_argument);
}

TEST(TwoPoint, ProductFormula) {
  LaurentElem phi = elem("z0*zb0/x", E1);
  for (int r = 1; r <= 3; ++r) EXPECT_TRUE(product_formula_residual(r, phi, phi).is_zero());
  EXPECT_TRUE(product_formula_residual(3, elem("z0*zb1/x", E1), elem("z1*zb0/x", E1)).is_zero());
  EXPECT_THROW(product_formula_residual(1, elem("x", E1), phi), MathError);
  RandomSource rng(4);
  for (int t = 0; t < 3; ++t) {
    LaurentElem f = rng.homogeneous(E2, 2), g = rng.homogeneous(E2, 2);
    if (f.is_zero() || g.is_zero()) continue;
    for (int r = 1; r <= 2; ++r) EXPECT_TRUE(product_formula_residual(r, f, g).is_zero());
  }
}

TEST(WickProperties, AssociativityBothMetrics) {
  for (const VarSpace& s : {E1, E2, I1}) {
    Report r = check_wick_associativity(s, 5, 3, 77);
    EXPECT_TRUE(r.all_passed()) << r.checks().front().detail;
  }
}

TEST(WickProperties, IdentitySuite) {
  for (const VarSpace& s : {E1, I1}) {
    Report r = check_wick_identities(s, 5, 4, 13);
    for (const auto& c : r.checks()) EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
  }
}

TEST(WickProperties, MomentumCommutatorHasNoHigherTerms) {
  for (const VarSpace& s : {E1, E2, I1}) {
    Report r = check_momentum_commutator(s, 10, 5, 8);
    EXPECT_TRUE(r.all_passed()) << r.checks().front().detail;
    Report c = check_commutator(s, 50, 3, 9);
    EXPECT_TRUE(c.all_passed()) << c.checks().front().detail;
  }
}
