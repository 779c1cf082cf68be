#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cpstar/context.hpp"

namespace cpstar {

class ParseError : public std::invalid_argument {
 public:
  ParseError(const std::string& what, std::size_t position);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

/// Parses an expression over the space's variables into a l-series of
/// order `order`.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('+' | '-') unary | power
///   power   := atom ('^' '-'? integer)?
///   atom    := integer | ident | '(' expr ')'
///   ident   := z<k> | zb<k> | x | y | l | i
///
/// x and y both name the metric quadratic, l the series parameter. Division
/// and negative powers need an invertible divisor (a unit at l^0).
LSeries parse_expr(std::string_view text, const VarSpace& space, int order);

/// Text that parse_expr reads back to the same series.
std::string format_series(const LSeries& s);

}  // namespace cpstar
