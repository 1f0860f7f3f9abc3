// expr.hpp -- the polynomial expression grammar for the CLI:
//
//   expr   := term ('+' term)*
//   term   := factor ('*' factor)*
//   factor := coeffLiteral | varName | factor '^' nat | '(' expr ')'
//
// Coefficient literals are element labels in brackets ([3], [(1,0)],
// [t^2]); brackets nest for matrix labels. Juxtaposition is not
// multiplication. Parsing normalizes immediately, so the result is a
// normal form even when the input is written in an arbitrary variable
// order. Diagnostics carry line and column.

#pragma once

#include "skewpbw/pbw.hpp"

#include <cctype>

namespace skewpbw {

struct ParseError : Error {
  int line, col;
  ParseError(int l, int c, const std::string& what)
      : Error("parse error at line " + std::to_string(l) + ", column " +
              std::to_string(c) + ": " + what),
        line(l),
        col(c) {}
};

namespace detail {

struct ExprToken {
  enum class Kind { plus, star, caret, lparen, rparen, ident, nat, coeff, end };
  Kind kind;
  std::string text;  // ident name or coefficient label
  unsigned value = 0;
  int line = 1, col = 1;
};

class ExprLexer {
 public:
  explicit ExprLexer(std::string_view text) : text_(text) {}

  ExprToken next() {
    skip_space();
    ExprToken tok;
    tok.line = line_;
    tok.col = col_;
    if (pos_ >= text_.size()) {
      tok.kind = ExprToken::Kind::end;
      return tok;
    }
    char ch = text_[pos_];
    switch (ch) {
      case '+': advance(); tok.kind = ExprToken::Kind::plus; return tok;
      case '*': advance(); tok.kind = ExprToken::Kind::star; return tok;
      case '^': advance(); tok.kind = ExprToken::Kind::caret; return tok;
      case '(': advance(); tok.kind = ExprToken::Kind::lparen; return tok;
      case ')': advance(); tok.kind = ExprToken::Kind::rparen; return tok;
      case '[': {
        int depth = 0;
        std::string label;
        while (pos_ < text_.size()) {
          char c = text_[pos_];
          if (c == '[') ++depth;
          if (c == ']' && --depth == 0) {
            advance();
            tok.kind = ExprToken::Kind::coeff;
            tok.text = label.substr(1);  // drop the opening bracket
            return tok;
          }
          label += c;
          advance();
        }
        throw ParseError(tok.line, tok.col, "unterminated coefficient literal");
      }
      default: break;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      unsigned v = 0;
      while (pos_ < text_.size() &&
             std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + static_cast<unsigned>(text_[pos_] - '0');
        advance();
      }
      tok.kind = ExprToken::Kind::nat;
      tok.value = v;
      return tok;
    }
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::string name;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
              text_[pos_] == '_')) {
        name += text_[pos_];
        advance();
      }
      tok.kind = ExprToken::Kind::ident;
      tok.text = std::move(name);
      return tok;
    }
    throw ParseError(line_, col_, std::string("unexpected character '") + ch + "'");
  }

 private:
  void advance() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else
      ++col_;
    ++pos_;
  }
  void skip_space() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      advance();
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  int line_ = 1, col_ = 1;
};

class ExprParser {
 public:
  ExprParser(PresPtr P, std::string_view text) : pres_(std::move(P)), lex_(text) {
    cur_ = lex_.next();
  }

  SkewPoly parse() {
    SkewPoly f = expr();
    if (cur_.kind != ExprToken::Kind::end)
      throw ParseError(cur_.line, cur_.col,
                       "expected '+', '*', '^' or end of input");
    return f;
  }

 private:
  SkewPoly expr() {
    SkewPoly f = term();
    while (cur_.kind == ExprToken::Kind::plus) {
      consume();
      f = add(f, term());
    }
    return f;
  }

  SkewPoly term() {
    SkewPoly f = factor();
    while (cur_.kind == ExprToken::Kind::star) {
      consume();
      f = mul(f, factor());
    }
    return f;
  }

  SkewPoly factor() {
    SkewPoly f = primary();
    while (cur_.kind == ExprToken::Kind::caret) {
      consume();
      if (cur_.kind != ExprToken::Kind::nat)
        throw ParseError(cur_.line, cur_.col, "'^' needs a natural number exponent");
      f = poly_pow(f, cur_.value);
      consume();
    }
    return f;
  }

  SkewPoly primary() {
    switch (cur_.kind) {
      case ExprToken::Kind::coeff: {
        auto e = pres_->ring->element_by_label(cur_.text);
        if (!e)
          throw ParseError(cur_.line, cur_.col,
                           "coefficient label [" + cur_.text + "] is not an element of " +
                               pres_->ring->name);
        consume();
        return const_poly(pres_, *e);
      }
      case ExprToken::Kind::ident: {
        for (std::size_t i = 0; i < pres_->n; ++i)
          if (pres_->var_names[i] == cur_.text) {
            consume();
            return var_poly(pres_, i);
          }
        throw ParseError(cur_.line, cur_.col, "unknown identifier " + cur_.text);
      }
      case ExprToken::Kind::lparen: {
        consume();
        SkewPoly f = expr();
        if (cur_.kind != ExprToken::Kind::rparen)
          throw ParseError(cur_.line, cur_.col, "expected ')'");
        consume();
        return f;
      }
      case ExprToken::Kind::nat:
        throw ParseError(cur_.line, cur_.col,
                         "bare numbers are exponents only; write coefficients as "
                         "bracketed labels like [2]");
      default:
        throw ParseError(cur_.line, cur_.col, "expected a factor");
    }
  }

  void consume() { cur_ = lex_.next(); }

  PresPtr pres_;
  ExprLexer lex_;
  ExprToken cur_;
};

}  // namespace detail

/// Parses and normalizes an expression against a presentation.
inline SkewPoly parse_expr(const PresPtr& P, std::string_view text) {
  return detail::ExprParser(P, text).parse();
}

}  // namespace skewpbw
