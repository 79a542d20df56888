#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "deq/scalar.hpp"

namespace deq {

/// Malformed scalar literal; column is the 1-based offset inside the literal.
class LiteralError : public std::runtime_error {
 public:
  LiteralError(const std::string& what, std::size_t column)
      : std::runtime_error(what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

/// Parses a scalar literal in the given field.
///
///   expr    := term (('+' | '-') term)*
///   term    := unary (('*' | '/') unary)*
///   unary   := ('-' | '+') unary | power
///   power   := primary ('^' '-'? integer)?
///   primary := integer | name | '(' expr ')'
///
/// Names must be declared variables of a rational-function field. Integers
/// are reduced mod p in a prime field, so "3/2" means 3 * 2^-1 there.
Scalar parse_scalar(const Field& field, std::string_view text);

}  // namespace deq
