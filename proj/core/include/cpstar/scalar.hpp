#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace cpstar {

/// Raised on algebraically undefined operations (division by zero, non-units).
class MathError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Exact rational number. Always stored in lowest terms with positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den);
  explicit Rational(mpq_class q) : q_(std::move(q)) { q_.canonicalize(); }

  /// Parses "p" or "p/q" (optional leading sign).
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return q_; }
  mpz_class numerator() const { return q_.get_num(); }
  mpz_class denominator() const { return q_.get_den(); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  Rational operator-() const { return Rational(mpq_class(-q_)); }
  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Rational pow(long e) const;
  Rational abs() const { return Rational(mpq_class(::abs(q_))); }

  /// "p" when the denominator is one, "p/q" otherwise.
  std::string str() const;

 private:
  mpq_class q_{0};
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// Exact Gaussian rational re + im*i.
class Complex {
 public:
  Complex() = default;
  Complex(long v) : re_(v) {}            // NOLINT(google-explicit-constructor)
  Complex(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  Complex(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static Complex i() { return {Rational(0), Rational(1)}; }

  /// Parses the serialization produced by str(), e.g. "3/2-1/4*i", "-2*i", "5".
  static Complex parse(std::string_view text);

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_one() const { return im_.is_zero() && re_.is_one(); }

  Complex conj() const { return {re_, -im_}; }
  Rational norm() const { return re_ * re_ + im_ * im_; }

  Complex operator-() const { return {-re_, -im_}; }
  Complex& operator+=(const Complex& o);
  Complex& operator-=(const Complex& o);
  Complex& operator*=(const Complex& o);
  Complex& operator/=(const Complex& o);

  friend Complex operator+(Complex a, const Complex& b) { return a += b; }
  friend Complex operator-(Complex a, const Complex& b) { return a -= b; }
  friend Complex operator*(Complex a, const Complex& b) { return a *= b; }
  friend Complex operator/(Complex a, const Complex& b) { return a /= b; }
  friend bool operator==(const Complex& a, const Complex& b) = default;

  Complex inverse() const;
  Complex pow(long e) const;

  /// Canonical serialization: "a", "b*i", "a+b*i" or "a-b*i" with a, b in
  /// lowest terms ("p" or "p/q").
  std::string str() const;

 private:
  Rational re_;
  Rational im_;
};

std::ostream& operator<<(std::ostream& os, const Complex& c);

Rational factorial(unsigned n);
Rational binomial(unsigned r, unsigned k);

}  // namespace cpstar
