#include <gtest/gtest.h>

#include <random>

#include "cpstar/scalar.hpp"

using namespace cpstar;

TEST(Rational, CanonicalAfterEveryOperation) {
  Rational a(6, -4);
  EXPECT_EQ(a.str(), "-3/2");
  EXPECT_EQ(a.denominator(), 2);
  EXPECT_EQ((a + Rational(3, 2)).str(), "0");
  EXPECT_EQ((Rational(1, 6) + Rational(1, 3)).str(), "1/2");
  EXPECT_THROW(Rational(1, 0), MathError);
  EXPECT_THROW(Rational(1) / Rational(0), MathError);
}

TEST(Rational, ParseRoundTrip) {
  for (const char* s : {"0", "7", "-7", "3/4", "-12/5", "123456789012345678901234567891/2"})
    EXPECT_EQ(Rational::parse(s).str(), s);
  EXPECT_EQ(Rational::parse("4/6").str(), "2/3");
  EXPECT_THROW(Rational::parse("1/0"), MathError);
  EXPECT_THROW(Rational::parse("abc"), std::invalid_argument);
}

TEST(Rational, PowersAndOrder) {
  EXPECT_EQ(Rational(2, 3).pow(3), Rational(8, 27));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_EQ(Rational(5).pow(0), Rational(1));
  EXPECT_LT(Rational(-1, 2), Rational(1, 3));
  EXPECT_EQ(Rational(-3, 4).abs(), Rational(3, 4));
}

TEST(Complex, SpecExamples) {
  Complex i = Complex::i();
  EXPECT_EQ((Complex(1) + i) * (Complex(1) - i), Complex(2));
  Complex c(Rational(3, 2), Rational(1, 4));
  EXPECT_EQ(c.conj(), Complex(Rational(3, 2), Rational(-1, 4)));
  EXPECT_EQ(Complex(2) / i, Complex(0) - Complex(2) * i);
  EXPECT_EQ((Complex(2) / i).str(), "-2*i");
}

TEST(Complex, Serialization) {
  EXPECT_EQ(Complex(Rational(1, 2), Rational(-3, 4)).str(), "1/2-3/4*i");
  EXPECT_EQ(Complex(Rational(1, 2), Rational(3, 4)).str(), "1/2+3/4*i");
  EXPECT_EQ(Complex::i().str(), "1*i");
  EXPECT_EQ(Complex(0).str(), "0");
  for (const char* s : {"1/2-3/4*i", "-1/2+3/4*i", "5", "-2*i", "0"})
    EXPECT_EQ(Complex::parse(s).str(), s);
}

TEST(Complex, DivisionByZeroIsAnError) {
  EXPECT_THROW(Complex(1) / Complex(0), MathError);
  EXPECT_THROW(Complex(0).inverse(), MathError);
}

TEST(Complex, FieldAxiomsOnRandomSamples) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 5);
  auto draw = [&] { return Complex(Rational(num(rng), den(rng)), Rational(num(rng), den(rng))); };
  for (int t = 0; t < 200; ++t) {
    Complex a = draw(), b = draw(), c = draw();
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a.conj().conj(), a);
    EXPECT_EQ((a * b).conj(), a.conj() * b.conj());
    if (!a.is_zero()) {
      EXPECT_EQ(a * a.inverse(), Complex(1));
      EXPECT_EQ(a.pow(-3) * a.pow(3), Complex(1));
    }
  }
}

TEST(Combinatorics, Values) {
  EXPECT_EQ(binomial(4, 2), Rational(6));
  EXPECT_EQ(factorial(0), Rational(1));
  EXPECT_EQ(factorial(10), Rational(3628800));
  EXPECT_EQ(binomial(2, 1), Rational(2));
  EXPECT_EQ(binomial(3, 5), Rational(0));
}
