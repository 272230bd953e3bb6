#include "millkit/heurlang/lexer.hpp"

#include <cctype>
#include <cstdlib>
#include <unordered_map>

namespace millkit::heurlang {

namespace {

const std::unordered_map<std::string_view, Tok> kKeywords = {
    {"let", Tok::KwLet},    {"if", Tok::KwIf},       {"elif", Tok::KwElif},
    {"else", Tok::KwElse},  {"then", Tok::KwThen},   {"return", Tok::KwReturn},
    {"and", Tok::KwAnd},    {"or", Tok::KwOr},       {"not", Tok::KwNot},
    {"true", Tok::KwTrue},  {"false", Tok::KwFalse},
};

}  // namespace

std::string_view token_name(Tok t) {
  switch (t) {
    case Tok::Ident: return "identifier";
    case Tok::Number: return "number";
    case Tok::KwLet: return "'let'";
    case Tok::KwIf: return "'if'";
    case Tok::KwElif: return "'elif'";
    case Tok::KwElse: return "'else'";
    case Tok::KwThen: return "'then'";
    case Tok::KwReturn: return "'return'";
    case Tok::KwAnd: return "'and'";
    case Tok::KwOr: return "'or'";
    case Tok::KwNot: return "'not'";
    case Tok::KwTrue: return "'true'";
    case Tok::KwFalse: return "'false'";
    case Tok::Plus: return "'+'";
    case Tok::Minus: return "'-'";
    case Tok::Star: return "'*'";
    case Tok::Slash: return "'/'";
    case Tok::SlashSlash: return "'//'";
    case Tok::StarStar: return "'**'";
    case Tok::Lt: return "'<'";
    case Tok::Le: return "'<='";
    case Tok::Gt: return "'>'";
    case Tok::Ge: return "'>='";
    case Tok::EqEq: return "'=='";
    case Tok::Ne: return "'!='";
    case Tok::Assign: return "'='";
    case Tok::LParen: return "'('";
    case Tok::RParen: return "')'";
    case Tok::LBrace: return "'{'";
    case Tok::RBrace: return "'}'";
    case Tok::Comma: return "','";
    case Tok::Semicolon: return "';'";
    case Tok::End: return "end of input";
  }
  return "?";
}

LexResult lex(const SourceUnit& src) {
  LexResult out;
  const std::string& s = src.text;
  std::size_t i = 0;
  int line = 1, col = 1;

  auto advance = [&](std::size_t n = 1) {
    for (std::size_t k = 0; k < n && i < s.size(); ++k) {
      if (s[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  auto push = [&](Tok t, std::string text, SourceLoc loc) {
    Token tok;
    tok.type = t;
    tok.text = std::move(text);
    tok.loc = loc;
    out.tokens.push_back(std::move(tok));
  };
  auto fail = [&](std::string msg, SourceLoc loc) {
    out.error = Diagnostic{DiagCode::LexError, std::move(msg), loc, src.origin};
  };

  while (i < s.size()) {
    char c = s[i];
    SourceLoc loc{line, col};
    if (c == ' ' || c == '\t' || c == '\r' || c == '\n') {
      advance();
      continue;
    }
    if (c == '#') {
      while (i < s.size() && s[i] != '\n') advance();
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = i;
      while (i < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) {
        advance();
      }
      std::string word = s.substr(start, i - start);
      auto kw = kKeywords.find(word);
      push(kw != kKeywords.end() ? kw->second : Tok::Ident, std::move(word), loc);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = i;
      bool has_dot = false, has_exp = false;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) advance();
      if (i < s.size() && s[i] == '.') {
        has_dot = true;
        advance();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
          fail("expected digits after decimal point", loc);
          return out;
        }
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) advance();
      }
      if (i < s.size() && (s[i] == 'e' || s[i] == 'E')) {
        has_exp = true;
        advance();
        if (i < s.size() && (s[i] == '+' || s[i] == '-')) advance();
        if (i >= s.size() || !std::isdigit(static_cast<unsigned char>(s[i]))) {
          fail("malformed exponent", loc);
          return out;
        }
        while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) advance();
      }
      std::string text = s.substr(start, i - start);
      Token tok;
      tok.type = Tok::Number;
      tok.text = text;
      tok.num_value = std::strtod(text.c_str(), nullptr);
      tok.is_integer = !has_dot && !has_exp;
      tok.loc = loc;
      out.tokens.push_back(std::move(tok));
      continue;
    }
    auto two = [&](char next) { return i + 1 < s.size() && s[i + 1] == next; };
    switch (c) {
      case '+': push(Tok::Plus, "+", loc); advance(); break;
      case '-': push(Tok::Minus, "-", loc); advance(); break;
      case '*':
        if (two('*')) { push(Tok::StarStar, "**", loc); advance(2); }
        else { push(Tok::Star, "*", loc); advance(); }
        break;
      case '/':
        if (two('/')) { push(Tok::SlashSlash, "//", loc); advance(2); }
        else { push(Tok::Slash, "/", loc); advance(); }
        break;
      case '<':
        if (two('=')) { push(Tok::Le, "<=", loc); advance(2); }
        else { push(Tok::Lt, "<", loc); advance(); }
        break;
      case '>':
        if (two('=')) { push(Tok::Ge, ">=", loc); advance(2); }
        else { push(Tok::Gt, ">", loc); advance(); }
        break;
      case '=':
        if (two('=')) { push(Tok::EqEq, "==", loc); advance(2); }
        else { push(Tok::Assign, "=", loc); advance(); }
        break;
      case '!':
        if (two('=')) { push(Tok::Ne, "!=", loc); advance(2); }
        else {
          fail("unexpected '!' (use 'not' for negation)", loc);
          return out;
        }
        break;
      case '(': push(Tok::LParen, "(", loc); advance(); break;
      case ')': push(Tok::RParen, ")", loc); advance(); break;
      case '{': push(Tok::LBrace, "{", loc); advance(); break;
      case '}': push(Tok::RBrace, "}", loc); advance(); break;
      case ',': push(Tok::Comma, ",", loc); advance(); break;
      case ';': push(Tok::Semicolon, ";", loc); advance(); break;
      default:
        fail(std::string("unexpected character '") + c + "'", loc);
        return out;
    }
  }
  Token end;
  end.type = Tok::End;
  end.loc = SourceLoc{line, col};
  out.tokens.push_back(std::move(end));
  return out;
}

}  // namespace millkit::heurlang
