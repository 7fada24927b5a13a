#ifndef HOMOTHETY_PARSE_HPP
#define HOMOTHETY_PARSE_HPP

#include <stdexcept>
#include <string>

#include "homothety/expr.hpp"

namespace homothety {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset)
      : std::runtime_error(message + " (byte " + std::to_string(offset) + ")"),
        offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses an infix expression. Binary + - * / ^ with standard precedence,
/// ^ right-associative and binding tighter than unary minus. Function call
/// syntax for exp, ln, sin, cos, tan, cot, csc, sqrt. Numeric literals are
/// decimal integers, decimals, or exact rationals p/q when both sides are
/// integer literals. Returns the unsimplified tree.
Expr parse(const std::string& text);

}  // namespace homothety

#endif  // HOMOTHETY_PARSE_HPP
