#include <gtest/gtest.h>

#include "cpstar/moreno.hpp"
#include "cpstar/random.hpp"
#include "cpstar/reduce.hpp"
#include "cpstar/verify.hpp"
#include "cpstar/wick.hpp"
#include "support.hpp"

using namespace cpstar;
using cpstar::test::elem;
using cpstar::test::q;

namespace {
const VarSpace E1 = VarSpace::euclidean(1);

UnivarPoly delta(std::vector<Complex> c) { return UnivarPoly(UVar::delta, std::move(c)); }
}  // namespace

TEST(Moreno, PPoly) {
  EXPECT_EQ(p_poly(1, 1), delta({0, 1}));
  EXPECT_EQ(p_poly(2, 1), delta({0, 0, 1}));
  EXPECT_EQ(p_poly(3, 1), delta({0, 0, 2, 1}));
  EXPECT_EQ(p_poly(2, 2), delta({0, -1, 1}));
  EXPECT_EQ(p_poly(0, 1), delta({1}));
}

TEST(Moreno, KPoly) {
  EXPECT_EQ(k_poly(1, 1), delta({0, 1}));
  EXPECT_EQ(k_poly(2, 1), delta({0, -1, q(1, 2)}));
  EXPECT_EQ(k_poly(3, 1), delta({0, 1, q(-3, 2) + q(2, 6), q(1, 6)}));
  for (int n = 1; n <= 3; ++n)
    for (int r = 1; r <= 10; ++r) {
      UnivarPoly expect(UVar::delta);
      for (int s = 1; s <= r; ++s) expect += p_poly(s, n) * Complex(k_coeff(r, s));
      EXPECT_EQ(k_poly(r, n), expect) << r << "," << n;
    }
}

TEST(Moreno, Recursion) {
  for (int r = 1; r <= 10; ++r) EXPECT_TRUE(moreno_recursion_residual(r).is_zero()) << r;
  EXPECT_THROW(moreno_recursion_residual(0), std::invalid_argument);
}

TEST(Moreno, CoefficientIdentities) {
  EXPECT_EQ(coeff_vanishing(2, 2), Rational(0));
  EXPECT_EQ(coeff_vanishing(3, 2), Rational(0));
  EXPECT_EQ(coeff_vanishing(8, 5), Rational(0));
  for (int r = 2; r <= 10; ++r)
    for (int s = 2; s <= r; ++s) EXPECT_EQ(coeff_vanishing(r, s), Rational(0)) << r << "," << s;
  for (int s = 1; s <= 8; ++s)
    for (int t = s; t <= 12; ++t) EXPECT_EQ(a_identity_check(s, t), Rational(0)) << s << "," << t;
  EXPECT_THROW(coeff_vanishing(3, 1), std::invalid_argument);
  EXPECT_THROW(a_identity_check(2, 1), std::invalid_argument);
}

TEST(Chart, ImagesAndContinuations) {
  ReducedFn phi(elem("z0*zb0/x", E1));
  ChartElem one(1, SparsePoly(4, Complex(1)));
  EXPECT_TRUE(to_chart(phi).equals(ChartElem(1, SparsePoly(4, Complex(1)), {0, 0, 0, 1})));
  EXPECT_TRUE(continue_left(phi).equals(ChartElem(1, SparsePoly(4, Complex(1)), {1, 0, 0, 0})));
  EXPECT_TRUE(continue_right(phi).equals(ChartElem(1, SparsePoly(4, Complex(1)), {0, 1, 0, 0})));
  EXPECT_TRUE(continue_left(phi).diagonal().equals(to_chart(phi)));
  EXPECT_TRUE(one.laplacian().is_zero());
}

TEST(Chart, Arithmetic) {
  ChartElem a(1, SparsePoly::variable(4, 0), {1, 0, 0, 0});
  ChartElem b(1, SparsePoly::variable(4, 3), {1, 0, 0, 0});
  // u/D1 + u vb/D1 * ... : u/D1 * D1 = u
  ChartElem d1(1, a.factor(0));
  EXPECT_TRUE((a * d1).equals(ChartElem(1, SparsePoly::variable(4, 0))));
  EXPECT_TRUE((a - a).is_zero());
  // d/du (1/D1) = -vb/D1^2
  ChartElem inv(1, SparsePoly(4, Complex(1)), {1, 0, 0, 0});
  EXPECT_TRUE(inv.diff(inv.u(0)).equals(ChartElem(1, -SparsePoly::variable(4, 3), {2, 0, 0, 0})));
  EXPECT_TRUE((a + b).equals(ChartElem(1, SparsePoly::variable(4, 0) + SparsePoly::variable(4, 3), {1, 0, 0, 0})));
  EXPECT_THROW(ChartElem(1, SparsePoly(3)), std::invalid_argument);
  EXPECT_THROW(ChartElem(2) + ChartElem(1), std::invalid_argument);
}

TEST(Chart, CrossCheck) {
  ReducedFn phi(elem("z0*zb0/x", E1));
  ReducedFn one(LaurentElem(E1, Complex(1)));
  EXPECT_TRUE(chart_cross_check(phi, phi, 1).is_zero());
  EXPECT_TRUE(chart_cross_check(phi, one, 1).is_zero());
  ReducedFn psi(elem("z0*zb1/x - i*z1*zb1/x", E1));
  for (int r = 1; r <= 3; ++r) EXPECT_TRUE(chart_cross_check(phi, psi, r).is_zero()) << r;
  EXPECT_THROW(chart_cross_check(ReducedFn(elem("z0*zb0/x", VarSpace::indefinite(1))), phi, 1),
               std::invalid_argument);
}

TEST(Chart, Suites) {
  for (const auto& k : check_moreno(10).checks()) EXPECT_TRUE(k.passed) << k.name << ": " << k.detail;
  for (const auto& k : check_chart(3, 3, 11).checks()) EXPECT_TRUE(k.passed) << k.name << ": " << k.detail;
}
