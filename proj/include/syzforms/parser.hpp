#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "syzforms/polynomial.hpp"

namespace syzforms {

struct ParseError : std::runtime_error {
  std::size_t pos;
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
};

// Grammar:
//   expr     := ['+'|'-'] term (('+'|'-') term)*
//   term     := factor ('*' factor)*
//   factor   := rational | var ('^' uint)? | '(' expr ')'
//   var      := 'x' '_'? uint
//   rational := int ('/' uint)?
// Whitespace is insignificant. Both x0 and x_0 are accepted; canonical
// output uses x_0.
Polynomial parse_poly(const std::string& text, const Ring& ring);

namespace detail {

// Shared lexer for polynomial and differential-form expressions.
enum class TokKind { Number, Var, Dx, Plus, Minus, Star, Caret, Slash, LParen, RParen, End };

struct Token {
  TokKind kind;
  std::size_t pos = 0;
  long value = 0;  // number value or variable index
};

class Lexer {
 public:
  explicit Lexer(const std::string& text);
  const Token& peek() const { return cur_; }
  Token next();

 private:
  void advance();
  const std::string& text_;
  std::size_t i_ = 0;
  Token cur_;
};

}  // namespace detail

}  // namespace syzforms
