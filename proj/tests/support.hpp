#pragma once

#include <ostream>
#include <string>

#include "cpstar/parse.hpp"

namespace cpstar::test {

inline LaurentElem elem(const std::string& text, const VarSpace& s) {
  return parse_expr(text, s, 0)[0];
}

inline LSeries series(const std::string& text, const VarSpace& s, int order) {
  return parse_expr(text, s, order);
}

inline Complex q(long num, long den = 1) { return Complex(Rational(num, den)); }

}  // namespace cpstar::test

namespace cpstar {

inline void PrintTo(const LaurentElem& e, std::ostream* os) { *os << e.str(); }
inline void PrintTo(const LSeries& s, std::ostream* os) { *os << format_series(s); }

}  // namespace cpstar
