#include "cpstar/parse.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace cpstar {

ParseError::ParseError(const std::string& what, std::size_t position)
    : std::invalid_argument(what + " at position " + std::to_string(position)),
      position_(position) {}

namespace {

class Parser {
 public:
  Parser(std::string_view text, const VarSpace& space, int order)
      : text_(text), space_(space), order_(order) {}

  LSeries run() {
    LSeries v = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const { throw ParseError(msg, at); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  LSeries constant(const Complex& c) const {
    return LSeries::constant(order_, LaurentElem(space_, c));
  }

  LSeries inverse(const LSeries& s, std::size_t at) const {
    if (!s[0].is_unit()) fail_at("division by a non-unit", at);
    return invert(s);
  }

  LSeries expr() {
    LSeries v = term();
    for (;;) {
      if (accept('+')) v += term();
      else if (accept('-')) v -= term();
      else return v;
    }
  }

  LSeries term() {
    LSeries v = unary();
    for (;;) {
      if (accept('*')) {
        v *= unary();
      } else if (accept('/')) {
        skip_ws();
        std::size_t at = pos_;
        v *= inverse(unary(), at);
      } else {
        return v;
      }
    }
  }

  LSeries unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  LSeries power() {
    skip_ws();
    std::size_t at = pos_;
    bool is_variable = false;
    LSeries base = atom(is_variable);
    if (!accept('^')) return base;
    bool negative = accept('-');
    skip_ws();
    long e = integer();
    if (!negative) return pow(base, static_cast<unsigned>(e));
    if (!base[0].is_unit())
      fail_at(is_variable ? "negative power of a non-x variable" : "negative power of a non-unit", at);
    return pow(invert(base), static_cast<unsigned>(e));
  }

  long integer() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    if (pos_ - start > 6) fail_at("exponent too large", start);
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  LSeries atom(bool& is_variable) {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      LSeries v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return constant(Complex(Rational::parse(text_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      is_variable = true;
      return identifier(text_.substr(start, pos_ - start), start);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  LSeries identifier(std::string_view name, std::size_t at) {
    if (name == "x" || name == "y")
      return LSeries::constant(order_, LaurentElem::x(space_));
    if (name == "l") {
      if (order_ < 1) return constant(Complex());
      return LSeries::monomial(order_, 1, LaurentElem(space_, Complex(1)));
    }
    if (name == "i") return constant(Complex::i());
    bool bar = name.starts_with("zb");
    std::string_view digits = name.substr(bar ? 2 : 1);
    if (name.front() == 'z' && !digits.empty() && digits.size() <= 2 &&
        std::all_of(digits.begin(), digits.end(),
                    [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
      int k = std::stoi(std::string(digits));
      if (k <= space_.n() && !space_.two_point()) {
        LaurentElem v = bar ? LaurentElem::zb(space_, k) : LaurentElem::z(space_, k);
        return LSeries::constant(order_, v);
      }
    }
    fail_at("unknown variable '" + std::string(name) + "'", at);
  }

  std::string_view text_;
  const VarSpace& space_;
  int order_;
  std::size_t pos_ = 0;
};

}  // namespace

LSeries parse_expr(std::string_view text, const VarSpace& space, int order) {
  return Parser(text, space, order).run();
}

std::string format_series(const LSeries& s) {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= s.order(); ++k) {
    if (s[k].is_zero()) continue;
    if (!first) os << " + ";
    if (k == 0) os << "(" << s[k].str() << ")";
    else if (k == 1) os << "l*(" << s[k].str() << ")";
    else os << "l^" << k << "*(" << s[k].str() << ")";
    first = false;
  }
  return first ? "0" : os.str();
}

}  // namespace cpstar
