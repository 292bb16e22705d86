#include "syzforms/parser.hpp"

#include <cctype>

namespace syzforms {
namespace detail {

Lexer::Lexer(const std::string& text) : text_(text) { advance(); }

Token Lexer::next() {
  Token t = cur_;
  advance();
  return t;
}

void Lexer::advance() {
  while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
  cur_.pos = i_;
  if (i_ >= text_.size()) {
    cur_.kind = TokKind::End;
    return;
  }
  char c = text_[i_];
  switch (c) {
    case '+': cur_.kind = TokKind::Plus; ++i_; return;
    case '-': cur_.kind = TokKind::Minus; ++i_; return;
    case '*': cur_.kind = TokKind::Star; ++i_; return;
    case '^': cur_.kind = TokKind::Caret; ++i_; return;
    case '/': cur_.kind = TokKind::Slash; ++i_; return;
    case '(': cur_.kind = TokKind::LParen; ++i_; return;
    case ')': cur_.kind = TokKind::RParen; ++i_; return;
    default: break;
  }
  if (std::isdigit(static_cast<unsigned char>(c))) {
    long v = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_]))) {
      v = v * 10 + (text_[i_] - '0');
      if (v > 1000000000L) throw ParseError("integer literal too large", cur_.pos);
      ++i_;
    }
    cur_.kind = TokKind::Number;
    cur_.value = v;
    return;
  }
  if (c == 'd' && i_ + 1 < text_.size() && text_[i_ + 1] == 'x') {
    i_ += 2;
    if (i_ < text_.size() && text_[i_] == '_') ++i_;
    if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
      throw ParseError("expected variable index after 'dx'", cur_.pos);
    long v = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
      v = v * 10 + (text_[i_++] - '0');
    cur_.kind = TokKind::Dx;
    cur_.value = v;
    return;
  }
  if (c == 'x') {
    ++i_;
    if (i_ < text_.size() && text_[i_] == '_') ++i_;
    if (i_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[i_])))
      throw ParseError("expected variable index after 'x'", cur_.pos);
    long v = 0;
    while (i_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i_])))
      v = v * 10 + (text_[i_++] - '0');
    cur_.kind = TokKind::Var;
    cur_.value = v;
    return;
  }
  throw ParseError(std::string("unexpected character '") + c + "'", cur_.pos);
}

namespace {

using detail::Lexer;
using detail::TokKind;

class PolyParser {
 public:
  PolyParser(const std::string& text, const Ring& ring) : lex_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    if (lex_.peek().kind != TokKind::End)
      throw ParseError("trailing input after expression", lex_.peek().pos);
    return p;
  }

 private:
  Polynomial expr() {
    bool neg = false;
    if (lex_.peek().kind == TokKind::Plus) {
      lex_.next();
    } else if (lex_.peek().kind == TokKind::Minus) {
      lex_.next();
      neg = true;
    }
    Polynomial acc = term();
    if (neg) acc = -acc;
    while (lex_.peek().kind == TokKind::Plus || lex_.peek().kind == TokKind::Minus) {
      bool minus = lex_.next().kind == TokKind::Minus;
      Polynomial t = term();
      acc = minus ? acc - t : acc + t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (lex_.peek().kind == TokKind::Star) {
      lex_.next();
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    const auto& tok = lex_.peek();
    switch (tok.kind) {
      case TokKind::Number:
      case TokKind::Minus:
        return Polynomial::constant(ring_, rational());
      case TokKind::Var: {
        auto t = lex_.next();
        if (t.value >= ring_.nvars)
          throw ParseError("unknown variable x_" + std::to_string(t.value), t.pos);
        int power = 1;
        if (lex_.peek().kind == TokKind::Caret) {
          lex_.next();
          auto e = lex_.next();
          if (e.kind != TokKind::Number)
            throw ParseError("expected non-negative integer exponent", e.pos);
          power = static_cast<int>(e.value);
        }
        return Polynomial::from_term(
            ring_, Monomial::var(ring_.nvars, static_cast<int>(t.value), power), Rational(1));
      }
      case TokKind::LParen: {
        lex_.next();
        Polynomial inner = expr();
        auto t = lex_.next();
        if (t.kind != TokKind::RParen) throw ParseError("expected ')'", t.pos);
        return inner;
      }
      case TokKind::Dx:
        throw ParseError("differential symbol not allowed in a polynomial", tok.pos);
      default:
        throw ParseError("expected a factor", tok.pos);
    }
  }

  Rational rational() {
    bool neg = false;
    if (lex_.peek().kind == TokKind::Minus) {
      lex_.next();
      neg = true;
    }
    auto t = lex_.next();
    if (t.kind != TokKind::Number) throw ParseError("expected integer", t.pos);
    Rational q(t.value);
    if (lex_.peek().kind == TokKind::Slash) {
      lex_.next();
      auto d = lex_.next();
      if (d.kind != TokKind::Number || d.value == 0)
        throw ParseError("expected positive denominator", d.pos);
      q /= Rational(d.value);
    }
    return neg ? Rational(-q) : q;
  }

  Lexer lex_;
  const Ring& ring_;
};

}  // namespace
}  // namespace detail

Polynomial parse_poly(const std::string& text, const Ring& ring) {
  return detail::PolyParser(text, ring).parse();
}

}  // namespace syzforms
