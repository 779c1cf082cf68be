#include <gtest/gtest.h>

#include "cpstar/parse.hpp"
#include "cpstar/random.hpp"
#include "support.hpp"

using namespace cpstar;
using cpstar::test::elem;
using cpstar::test::q;

namespace {
const VarSpace E1 = VarSpace::euclidean(1);
const VarSpace I2 = VarSpace::indefinite(2);
}  // namespace

TEST(Parse, Basics) {
  LaurentElem z0 = LaurentElem::z(E1, 0), zb1 = LaurentElem::zb(E1, 1);
  EXPECT_EQ(elem("z0*zb1", E1), z0 * zb1);
  EXPECT_EQ(elem("x", E1), LaurentElem::x(E1));
  EXPECT_EQ(elem("y", E1), LaurentElem::x(E1));
  EXPECT_EQ(elem("x^-2", E1), LaurentElem::x(E1, -2));
  EXPECT_EQ(elem("1/x^2", E1), LaurentElem::x(E1, -2));
  EXPECT_EQ(elem("3/2*i*z0", E1), z0 * Complex(Rational(0), Rational(3, 2)));
  EXPECT_EQ(elem("-(z0 - z0)", E1), LaurentElem(E1));
  EXPECT_EQ(elem("z0*zb0 + z1*zb1", E1), LaurentElem::x(E1));
  EXPECT_EQ(elem("z0*zb0 + z1*zb1", VarSpace::indefinite(1)),
            elem("2*z1*zb1 - x", VarSpace::indefinite(1)));
}

TEST(Parse, SeriesParameter) {
  LSeries s = parse_expr("1 + l*z0 - l^3", E1, 2);
  ASSERT_EQ(s.order(), 2);
  EXPECT_EQ(s[0], elem("1", E1));
  EXPECT_EQ(s[1], elem("z0", E1));
  EXPECT_TRUE(s[2].is_zero());
  LSeries inv = parse_expr("1/(1 + l)", E1, 3);
  for (int k = 0; k <= 3; ++k) EXPECT_EQ(inv[k], LaurentElem(E1, Complex(k % 2 ? -1 : 1)));
}

TEST(Parse, Errors) {
  auto pos = [](const char* text, const VarSpace& s) -> long {
    try {
      parse_expr(text, s, 2);
    } catch (const ParseError& e) {
      return static_cast<long>(e.position());
    }
    return -1;
  };
  EXPECT_EQ(pos("z0 + w3", E1), 5);
  EXPECT_EQ(pos("z2", E1), 0);
  EXPECT_GE(pos("z0^-1", E1), 0);
  EXPECT_GE(pos("1/(z0 + 1)", E1), 0);
  EXPECT_GE(pos("1/l", E1), 0);
  EXPECT_GE(pos("(z0", E1), 0);
  EXPECT_GE(pos("z0 +", E1), 0);
  EXPECT_GE(pos("1/0", E1), 0);
  EXPECT_EQ(pos("z2*zb2", I2), -1);
}

TEST(Parse, FormatRoundTrip) {
  RandomSource rng(3);
  for (const VarSpace& s : {E1, I2}) {
    for (int t = 0; t < 30; ++t) {
      LSeries f(3, LaurentElem(s));
      for (int k = 0; k <= 3; ++k) f[k] = k % 2 ? rng.invariant(s, 2) : rng.polynomial(s, 3);
      std::string text = format_series(f);
      EXPECT_EQ(parse_expr(text, s, 3), f) << text;
    }
  }
  LSeries phi = parse_expr("z0*zb0/x + l*x^2", E1, 1);
  EXPECT_EQ(parse_expr(format_series(phi), E1, 1), phi);
}
