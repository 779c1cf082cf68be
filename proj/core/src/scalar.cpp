#include "cpstar/scalar.hpp"

#include <cctype>
#include <ostream>

namespace cpstar {

Rational::Rational(long num, long den) {
  if (den == 0) throw MathError("rational with zero denominator");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  auto slash = s.find('/');
  auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (i >= t.size()) return false;
    for (; i < t.size(); ++i)
      if (!std::isdigit(static_cast<unsigned char>(t[i]))) return false;
    return true;
  };
  std::string num = s.substr(0, slash);
  std::string den = slash == std::string::npos ? "1" : s.substr(slash + 1);
  if (!num.empty() && num[0] == '+') num.erase(0, 1);
  if (!valid_int(num) || !valid_int(den) || den[0] == '-' || den[0] == '+')
    throw std::invalid_argument("malformed rational literal: " + s);
  mpz_class n(num), d(den);
  if (d == 0) throw MathError("rational with zero denominator");
  return Rational(mpq_class(n, d));
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw MathError("division by zero");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e < 0) {
    if (is_zero()) throw MathError("zero to a negative power");
    return Rational(1) / pow(-e);
  }
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(e));
  return Rational(mpq_class(n, d));
}

std::string Rational::str() const {
  if (q_.get_den() == 1) return q_.get_num().get_str();
  return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Complex& Complex::operator+=(const Complex& o) {
  re_ += o.re_;
  if (!o.im_.is_zero()) im_ += o.im_;
  return *this;
}

Complex& Complex::operator-=(const Complex& o) {
  re_ -= o.re_;
  if (!o.im_.is_zero()) im_ -= o.im_;
  return *this;
}

Complex& Complex::operator*=(const Complex& o) {
  if (im_.is_zero() && o.im_.is_zero()) {
    re_ *= o.re_;
    return *this;
  }
  Rational re = re_ * o.re_ - im_ * o.im_;
  Rational im = re_ * o.im_ + im_ * o.re_;
  re_ = std::move(re);
  im_ = std::move(im);
  return *this;
}

Complex Complex::inverse() const {
  if (is_zero()) throw MathError("division by zero");
  if (im_.is_zero()) return Complex(Rational(1) / re_);
  Rational n = norm();
  return {re_ / n, -im_ / n};
}

Complex& Complex::operator/=(const Complex& o) {
  if (o.is_zero()) throw MathError("division by zero");
  if (o.im_.is_zero()) {
    re_ /= o.re_;
    if (!im_.is_zero()) im_ /= o.re_;
    return *this;
  }
  return *this *= o.inverse();
}

Complex Complex::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  Complex result(1), base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    base *= base;
    e >>= 1;
  }
  return result;
}

std::string Complex::str() const {
  if (im_.is_zero()) return re_.str();
  std::string im = im_.str() + "*i";
  if (re_.is_zero()) return im;
  if (im_.sign() < 0) return re_.str() + im;
  return re_.str() + "+" + im;
}

Complex Complex::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty complex literal");
  if (s.size() < 2 || s.substr(s.size() - 2) != "*i") return Complex(Rational::parse(s));
  std::string body = s.substr(0, s.size() - 2);
  // the imaginary part starts at the last sign that is not the leading one
  auto pos = body.find_last_of("+-");
  if (pos == std::string::npos || pos == 0) return {Rational(0), Rational::parse(body)};
  Rational re = Rational::parse(body.substr(0, pos));
  Rational im = Rational::parse(body.substr(pos));
  return {re, im};
}

std::ostream& operator<<(std::ostream& os, const Complex& c) { return os << c.str(); }

Rational factorial(unsigned n) {
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), n);
  return Rational(mpq_class(f));
}

Rational binomial(unsigned r, unsigned k) {
  if (k > r) return Rational(0);
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), r, k);
  return Rational(mpq_class(b));
}

}  // namespace cpstar
