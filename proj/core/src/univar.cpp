#include "cpstar/univar.hpp"

#include <sstream>
#include <stdexcept>

namespace cpstar {

namespace {

const char* var_symbol(UVar v, bool latex) {
  switch (v) {
    case UVar::x:
      return "x";
    case UVar::alpha:
      return latex ? "\\alpha" : "a";
    case UVar::delta:
      return latex ? "\\Delta" : "D";
  }
  return "?";
}

}  // namespace

UnivarPoly::UnivarPoly(UVar var, std::vector<Complex> coeffs) : var_(var), c_(std::move(coeffs)) {
  trim();
}

UnivarPoly UnivarPoly::monomial(UVar var, unsigned degree, const Complex& c) {
  std::vector<Complex> v(degree + 1);
  v[degree] = c;
  return {var, std::move(v)};
}

void UnivarPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

void UnivarPoly::check(const UnivarPoly& o) const {
  if (var_ != o.var_) throw std::invalid_argument("univariate polynomials in different variables");
}

UnivarPoly& UnivarPoly::operator+=(const UnivarPoly& o) {
  check(o);
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
  trim();
  return *this;
}

UnivarPoly& UnivarPoly::operator-=(const UnivarPoly& o) { return *this += -o; }

UnivarPoly& UnivarPoly::operator*=(const Complex& s) {
  for (auto& c : c_) c *= s;
  trim();
  return *this;
}

UnivarPoly UnivarPoly::operator-() const {
  UnivarPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UnivarPoly operator*(const UnivarPoly& a, const UnivarPoly& b) {
  a.check(b);
  if (a.is_zero() || b.is_zero()) return UnivarPoly(a.var_);
  std::vector<Complex> out(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return {a.var_, std::move(out)};
}

UnivarPoly UnivarPoly::derivative(unsigned r) const {
  if (static_cast<int>(r) > degree()) return UnivarPoly(var_);
  std::vector<Complex> out(c_.size() - r);
  for (std::size_t k = r; k < c_.size(); ++k) {
    // k (k-1) ... (k-r+1)
    long falling = 1;
    for (std::size_t j = 0; j < r; ++j) falling *= static_cast<long>(k - j);
    out[k - r] = c_[k] * Complex(falling);
  }
  return {var_, std::move(out)};
}

UnivarPoly UnivarPoly::truncated_degree(int max_degree) const {
  if (max_degree >= degree()) return *this;
  if (max_degree < 0) return UnivarPoly(var_);
  return {var_, std::vector<Complex>(c_.begin(), c_.begin() + max_degree + 1)};
}

Complex UnivarPoly::eval(const Complex& at) const {
  Complex acc;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * at + *it;
  return acc;
}

std::string UnivarPoly::str() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    if (c_[k].is_zero()) continue;
    std::string c = c_[k].is_real() ? c_[k].str() : "(" + c_[k].str() + ")";
    if (!first) {
      if (c[0] == '-') {
        os << " - ";
        c.erase(0, 1);
      } else {
        os << " + ";
      }
    }
    if (k == 0) {
      os << c;
    } else {
      if (c == "-") c = "-1";
      if (c != "1") os << (c == "-1" ? "-" : c + "*");
      os << var_symbol(var_, false);
      if (k > 1) os << "^" << k;
    }
    first = false;
  }
  return os.str();
}

std::string UnivarPoly::latex() const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < c_.size(); ++k) {
    const Complex& c = c_[k];
    if (c.is_zero()) continue;
    if (!c.is_real()) throw std::invalid_argument("latex output supports real coefficients only");
    const Rational& r = c.re();
    bool neg = r.sign() < 0;
    Rational a = r.abs();
    if (!first || neg) os << (neg ? (first ? "-" : " - ") : " + ");
    bool unit = a.is_one() && k > 0;
    if (!unit) {
      if (a.denominator() == 1) {
        os << a.numerator().get_str();
      } else {
        os << "\\frac{" << a.numerator().get_str() << "}{" << a.denominator().get_str() << "}";
      }
    }
    if (k > 0) {
      os << var_symbol(var_, true);
      if (k > 1) os << "^{" << k << "}";
    }
    first = false;
  }
  return os.str();
}

}  // namespace cpstar
