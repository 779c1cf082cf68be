#include <gtest/gtest.h>

#include <array>

#include "cpstar/poly.hpp"
#include "cpstar/random.hpp"
#include "support.hpp"

using namespace cpstar;
using cpstar::test::elem;
using cpstar::test::q;

namespace {
const VarSpace E1 = VarSpace::euclidean(1);
const VarSpace I1 = VarSpace::indefinite(1);
}  // namespace

TEST(SparsePoly, ArithmeticDropsZeros) {
  SparsePoly a = SparsePoly::variable(2, 0) + SparsePoly::variable(2, 1);
  SparsePoly b = SparsePoly::variable(2, 0) - SparsePoly::variable(2, 1);
  SparsePoly p = a * b;
  EXPECT_EQ(p.size(), 2u);
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_EQ(a.pow(3).size(), 4u);
  EXPECT_EQ(p.diff(0), SparsePoly::variable(2, 0) * Complex(2));
}

TEST(SparsePoly, SubstituteAndEval) {
  SparsePoly x = SparsePoly::variable(2, 0), y = SparsePoly::variable(2, 1);
  SparsePoly p = x * x * y + SparsePoly(2, Complex(3));
  SparsePoly s = p.substitute(0, y + SparsePoly(2, Complex(1)));
  std::array<Complex, 2> pt{Complex(5), Complex(2)};
  EXPECT_EQ(s.eval(pt), Complex(21));
}

TEST(LaurentElem, RingExamples) {
  EXPECT_EQ(elem("z0", E1) * elem("zb0", E1), elem("z0*zb0", E1));
  EXPECT_EQ(LaurentElem::x(E1) * LaurentElem::x(E1, -1), LaurentElem(E1, Complex(1)));
  LaurentElem s = elem("z0*zb0 + z1*zb1", E1);
  EXPECT_TRUE(s.numerator().is_constant());
  EXPECT_EQ(s.xpow(), -1);
  EXPECT_EQ(s, LaurentElem::x(E1));
}

TEST(LaurentElem, DivideByX) {
  auto x = E1.x_poly();
  EXPECT_EQ(*divide_by_x(x, E1), SparsePoly(4, Complex(1)));
  EXPECT_FALSE(divide_by_x(elem("z0*zb0", E1).numerator(), E1).has_value());
  SparsePoly x2mx = x * x - x;
  EXPECT_EQ(*divide_by_x(x2mx, E1), x - SparsePoly(4, Complex(1)));
  EXPECT_EQ(*divide_by_x(I1.x_poly() * elem("z0", I1).numerator(), I1), elem("z0", I1).numerator());
}

TEST(LaurentElem, DiffExamples) {
  EXPECT_EQ(elem("z0*zb0", E1).diff(E1.z(0)), elem("zb0", E1));
  EXPECT_EQ(elem("1/x", E1).diff(E1.z(1)), elem("-zb1/x^2", E1));
  EXPECT_EQ(elem("z0*zb0/x", E1).diff(E1.z(1)), elem("-z0*zb0*zb1/x^2", E1));
  EXPECT_EQ(elem("1/y", I1).diff(I1.z(0)), elem("zb0/y^2", I1));
}

TEST(LaurentElem, DiffMatchesRawQuotientRule) {
  RandomSource rng(3);
  for (int t = 0; t < 30; ++t) {
    LaurentElem f = rng.invariant(E1, 2);
    for (std::size_t v = 0; v < E1.nvars(); ++v) {
      SparsePoly raw = f.xpow() == 0 ? f.numerator().diff(v)
                                     : quotient_rule_numerator(f.numerator(), f.xpow(), v, E1);
      LaurentElem expect(E1, raw, f.xpow() == 0 ? 0 : f.xpow() + 1);
      EXPECT_EQ(f.diff(v), expect);
    }
  }
}

TEST(LaurentElem, Bidegree) {
  EXPECT_EQ(elem("z0*zb0/x", E1).bidegree(), (std::pair{0, 0}));
  EXPECT_EQ(elem("x", E1).bidegree(), (std::pair{1, 1}));
  EXPECT_EQ(elem("z0", E1).bidegree(), (std::pair{1, 0}));
  EXPECT_FALSE(elem("1 + z0", E1).bidegree().has_value());
  EXPECT_TRUE(elem("z0*zb0/x", E1).is_homogeneous());
  EXPECT_FALSE(elem("x", E1).is_homogeneous());
  EXPECT_TRUE(elem("1 + x", E1).is_u1_invariant());
  EXPECT_FALSE(elem("z0", E1).is_u1_invariant());
}

TEST(LaurentElem, EulerOperators) {
  EXPECT_TRUE(elem("z0*zb0/x", E1).euler(EulerOp::E).is_zero());
  EXPECT_TRUE(elem("x", E1).euler(EulerOp::Y).is_zero());
  EXPECT_EQ(elem("z0", E1).euler(EulerOp::E), elem("z0", E1));
  LaurentElem f = elem("z0^2*zb1/x", E1);
  EXPECT_TRUE(f.euler(EulerOp::Ebar).is_zero());
  EXPECT_EQ(f.euler(EulerOp::E), f);
  EXPECT_EQ(f.euler(EulerOp::Y), f * Complex(Rational(0), Rational(1)));
  EXPECT_THROW(elem("x", E1).euler(EulerOp::Hfull), std::invalid_argument);
}

TEST(LaurentElem, Eval) {
  std::array<Complex, 2> p10{Complex(1), Complex(0)}, p11{Complex(1), Complex(1)};
  EXPECT_EQ(elem("x", E1).eval(p10), Complex(1));
  EXPECT_EQ(elem("z0*zb0/x", E1).eval(p11), q(1, 2));
  EXPECT_EQ(elem("y", I1).eval(p11), Complex(0));
  EXPECT_THROW(elem("1/y", I1).eval(p11), MathError);
  std::array<Complex, 2> pi{Complex::i(), Complex(2)};
  EXPECT_EQ(elem("z0*zb0", E1).eval(pi), Complex(1));
}

TEST(LaurentElem, RandomProperties) {
  RandomSource rng(11);
  std::array<Complex, 2> pt{Complex(Rational(1, 2), Rational(1)), Complex(2, 0)};
  for (int t = 0; t < 200; ++t) {
    LaurentElem a = rng.invariant(E1, 2), b = rng.polynomial(E1, 3);
    // canonical equality agrees with cross-multiplication
    LaurentElem raw(E1, a.numerator() * E1.x_poly(), a.xpow() + 1);
    EXPECT_EQ(raw, a);
    EXPECT_TRUE(raw.equals_by_cross_multiplication(a));
    EXPECT_EQ(a.equals_by_cross_multiplication(b), a == b);
    // mixed partials commute
    EXPECT_EQ(a.diff(E1.z(0)).diff(E1.zb(1)), a.diff(E1.zb(1)).diff(E1.z(0)));
    // evaluation is a ring morphism
    EXPECT_EQ((a * b).eval(pt), a.eval(pt) * b.eval(pt));
    EXPECT_EQ((a + b).eval(pt), a.eval(pt) + b.eval(pt));
    LaurentElem h = rng.homogeneous(E1, 2);
    EXPECT_TRUE(h.euler(EulerOp::E).is_zero());
    EXPECT_TRUE(h.euler(EulerOp::Ebar).is_zero());
  }
}

TEST(LaurentElem, MismatchedSpacesThrow) {
  EXPECT_THROW(elem("z0", E1) + elem("z0", I1), std::invalid_argument);
  EXPECT_THROW(elem("z0", E1) * elem("z0", VarSpace::euclidean(2)), std::invalid_argument);
}

TEST(LaurentElem, HomogeneousSlices) {
  LaurentElem f = elem("z0*zb0 + z0*zb1/x + 3*x^2", E1);
  auto slices = homogeneous_slices(f);
  ASSERT_EQ(slices.size(), 3u);
  EXPECT_EQ(slices.at(1), elem("z0*zb0/x", E1));
  EXPECT_EQ(slices.at(0), elem("z0*zb1/x", E1));
  EXPECT_EQ(slices.at(2), elem("3", E1));
  EXPECT_THROW(homogeneous_slices(elem("z0", E1)), MathError);
}

TEST(LaurentElem, TwoPointAndDiagonal) {
  VarSpace t = E1.doubled();
  LaurentElem f = elem("z0*zb0/x", E1), g = elem("z1*zb0/x", E1);
  LaurentElem fg = tensor(f, g);
  EXPECT_EQ(fg.diagonal(), f * g);
  EXPECT_TRUE(fg.euler(EulerOp::Hfull).is_zero());
  EXPECT_EQ(fg.xpow(1), 1);
  EXPECT_EQ(t.nvars(), 8u);
}

TEST(LaurentElem, ConjugationSwapsBars) {
  EXPECT_EQ(elem("i*z0*zb1^2/x", E1).conj(), elem("-i*zb0*z1^2/x", E1));
}
