#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "s3lite/errors.hpp"

namespace s3lite {

enum class TokenKind {
  Ident,
  Number,
  String,
  Arrow,     // <-
  Dollar,    // $
  LParen,
  RParen,
  LBrace,
  RBrace,
  Comma,
  Op,        // + - * / ** (^ lexes as **)
  InOp,      // %in%
  Colon,     // :
  If,
  Else,
  Function,
  Newline,
  Semicolon,
  Eof,
};

std::string_view token_kind_name(TokenKind kind);

struct Token {
  TokenKind kind;
  std::string lexeme;  // decoded contents for String tokens
  SourcePos pos;
};

/// Splits source text into tokens, always terminated by Eof. `#` starts a
/// comment running to end of line. Throws LexError for an unterminated
/// string or an illegal character.
std::vector<Token> tokenize(std::string_view source);

}  // namespace s3lite
