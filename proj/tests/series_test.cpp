#include <gtest/gtest.h>

#include "cpstar/context.hpp"
#include "cpstar/equiv.hpp"
#include "cpstar/random.hpp"
#include "support.hpp"

using namespace cpstar;
using cpstar::test::q;
using cpstar::test::series;
using CS = Series<Complex>;

namespace {
const VarSpace E1 = VarSpace::euclidean(1);

CS cs(std::vector<Complex> c) { return CS(std::move(c)); }
}  // namespace

TEST(Series, CauchyProduct) {
  EXPECT_EQ(cs({1, 1, 0}) * cs({1, -1, 0}), cs({1, 0, -1}));
  EXPECT_EQ(series("(1 + l*x)^2", E1, 2), series("1 + 2*l*x + l^2*x^2", E1, 2));
  EXPECT_EQ(series("x", E1, 1) * series("l/x", E1, 1), series("l", E1, 1));
  EXPECT_EQ((cs({1, 2, 3}) * cs({1, 1})).order(), 1);
}

TEST(Series, TrailingZerosKept) {
  CS a(4, Complex());
  EXPECT_EQ(a.order(), 4);
  EXPECT_TRUE(a.is_zero());
  EXPECT_EQ((a + cs({1, 2})).order(), 1);
  EXPECT_THROW(CS(-1, Complex()), std::invalid_argument);
}

TEST(Series, Invert) {
  EXPECT_EQ(invert(cs({1, 1, 0, 0})), cs({1, -1, 1, -1}));
  EXPECT_EQ(invert(series("1 + l/x", E1, 2)), series("1 - l/x + l^2/x^2", E1, 2));
  EXPECT_EQ(invert(cs({2, 0})), cs({q(1, 2), 0}));
  EXPECT_THROW(invert(cs({0, 1})), MathError);
  EXPECT_THROW(invert(series("z0 + l", E1, 2)), MathError);
}

TEST(Series, Reparametrize) {
  EXPECT_EQ(reparametrize(cs({1, 1}), cs({0, 2})), cs({1, 2}));
  CS u = invert(cs({1, 1, 0, 0})).shifted(1);  // l / (1 + l)
  EXPECT_EQ(reparametrize(cs({0, 0, 1, 0}), u), cs({0, 0, 1, -2}));
  CS a = cs({3, q(1, 2), Complex::i(), 7});
  EXPECT_EQ(reparametrize(a, cs({0, 1, 0, 0})), a);
  EXPECT_THROW(reparametrize(a, cs({1, 1, 0, 0})), MathError);
}

TEST(Series, ExpTruncated) {
  EXPECT_EQ(exp_truncated(cs({0, 1, 0})), cs({1, 1, q(1, 2)}));
  EXPECT_EQ(exp_truncated(cs({0, 0, 0})), cs({1, 0, 0}));
  EXPECT_THROW(exp_truncated(cs({1, 0})), MathError);
  // exp(-l x a^2 / 2 + l^2 x a^3 / 3) in the variables (x, a)
  auto mono = [](int ex, int ea, Complex c) {
    Monomial m;
    m[0] = static_cast<Monomial::Exp>(ex);
    m[1] = static_cast<Monomial::Exp>(ea);
    return SparsePoly::monomial(2, m, c);
  };
  Series<SparsePoly> arg(2, SparsePoly(2));
  arg[1] = mono(1, 2, q(-1, 2));
  arg[2] = mono(1, 3, q(1, 3));
  Series<SparsePoly> e = exp_truncated(arg);
  EXPECT_EQ(e[0], SparsePoly(2, Complex(1)));
  EXPECT_EQ(e[1], mono(1, 2, q(-1, 2)));
  EXPECT_EQ(e[2], mono(1, 3, q(1, 3)) + mono(2, 4, q(1, 8)));
}

TEST(Series, RandomProperties) {
  RandomSource rng(5);
  auto draw = [&] {
    CS s(4, Complex());
    for (int k = 0; k <= 4; ++k) s[k] = rng.coeff();
    return s;
  };
  for (int t = 0; t < 100; ++t) {
    CS a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    CS z = a;
    z[0] = Complex();
    EXPECT_EQ(exp_truncated(z) * exp_truncated(-z), CS::constant(4, Complex(1)));
    if (!a[0].is_zero()) {
      EXPECT_EQ(invert(invert(a)), a);
      EXPECT_EQ(a * invert(a), CS::constant(4, Complex(1)));
    }
  }
}

TEST(Series, LaurentCarrierInverse) {
  RandomSource rng(9);
  for (int t = 0; t < 20; ++t) {
    LSeries s(3, LaurentElem(E1));
    s[0] = LaurentElem::x(E1, rng.uniform(-2, 2)) * rng.nonzero_coeff();
    for (int k = 1; k <= 3; ++k) s[k] = rng.invariant(E1, 2);
    EXPECT_EQ(s * invert(s), LSeries::constant(3, LaurentElem(E1, Complex(1))));
  }
}

TEST(StarContext, Validation) {
  EXPECT_THROW(StarContext(E1, 0), std::invalid_argument);
  EXPECT_THROW(StarContext(E1, 3, {Rational(2)}), std::invalid_argument);
  EXPECT_THROW(StarContext(E1, 3, {Rational(1)}, Rational(1, 2)), std::invalid_argument);
  StarContext c(E1, 3, {Rational(1), Rational(0)});
  EXPECT_TRUE(c.d_trivial());
  EXPECT_EQ(c.level(), Rational(1));
  EXPECT_EQ(c.with_mu(Rational(-2)).level(), Rational(4));
  EXPECT_EQ(c.d(5), Rational(0));
}
