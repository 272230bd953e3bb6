#pragma once

#include <optional>
#include <string>
#include <vector>

#include "millkit/heurlang/ast.hpp"

namespace millkit::heurlang {

enum class Tok {
  Ident, Number,
  KwLet, KwIf, KwElif, KwElse, KwThen, KwReturn, KwAnd, KwOr, KwNot, KwTrue, KwFalse,
  Plus, Minus, Star, Slash, SlashSlash, StarStar,
  Lt, Le, Gt, Ge, EqEq, Ne, Assign,
  LParen, RParen, LBrace, RBrace, Comma, Semicolon,
  End,
};

struct Token {
  Tok type = Tok::End;
  std::string text;
  double num_value = 0.0;
  bool is_integer = false;
  SourceLoc loc;
};

struct LexResult {
  std::vector<Token> tokens;            // ends with Tok::End on success
  std::optional<Diagnostic> error;
};

LexResult lex(const SourceUnit& src);

std::string_view token_name(Tok t);

}  // namespace millkit::heurlang
