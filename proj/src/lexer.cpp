#include "s3lite/lexer.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>

namespace s3lite {

std::string_view token_kind_name(TokenKind kind) {
  switch (kind) {
    case TokenKind::Ident: return "identifier";
    case TokenKind::Number: return "number";
    case TokenKind::String: return "string";
    case TokenKind::Arrow: return "'<-'";
    case TokenKind::Dollar: return "'$'";
    case TokenKind::LParen: return "'('";
    case TokenKind::RParen: return "')'";
    case TokenKind::LBrace: return "'{'";
    case TokenKind::RBrace: return "'}'";
    case TokenKind::Comma: return "','";
    case TokenKind::Op: return "operator";
    case TokenKind::InOp: return "'%in%'";
    case TokenKind::Colon: return "':'";
    case TokenKind::If: return "'if'";
    case TokenKind::Else: return "'else'";
    case TokenKind::Function: return "'function'";
    case TokenKind::Newline: return "newline";
    case TokenKind::Semicolon: return "';'";
    case TokenKind::Eof: return "end of input";
  }
  return "token";
}

namespace {

bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); }
bool is_digit(char c) { return c >= '0' && c <= '9'; }
bool is_ident_char(char c) { return is_alpha(c) || is_digit(c) || c == '.' || c == '_'; }

class Lexer {
 public:
  explicit Lexer(std::string_view src) : src_(src) {}

  std::vector<Token> run() {
    std::vector<Token> out;
    while (i_ < src_.size()) {
      char c = src_[i_];
      SourcePos start = pos();
      if (c == ' ' || c == '\t' || c == '\r' || c == '\f') {
        advance();
      } else if (c == '#') {
        while (i_ < src_.size() && src_[i_] != '\n') advance();
      } else if (c == '\n') {
        advance();
        out.push_back({TokenKind::Newline, "\n", start});
      } else if (is_digit(c) || (c == '.' && is_digit(peek(1)))) {
        out.push_back(number(start));
      } else if (is_alpha(c) || c == '.') {
        out.push_back(identifier(start));
      } else if (c == '"') {
        out.push_back(string(start));
      } else {
        out.push_back(punctuation(start));
      }
    }
    out.push_back({TokenKind::Eof, "", pos()});
    return out;
  }

 private:
  SourcePos pos() const { return {line_, col_}; }

  char peek(std::size_t ahead) const {
    return i_ + ahead < src_.size() ? src_[i_ + ahead] : '\0';
  }

  void advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }

  Token number(SourcePos start) {
    std::size_t begin = i_;
    while (is_digit(peek(0))) advance();
    if (peek(0) == '.') {
      advance();
      while (is_digit(peek(0))) advance();
    }
    if ((peek(0) == 'e' || peek(0) == 'E') &&
        (is_digit(peek(1)) || ((peek(1) == '+' || peek(1) == '-') && is_digit(peek(2))))) {
      advance();
      if (peek(0) == '+' || peek(0) == '-') advance();
      while (is_digit(peek(0))) advance();
    }
    std::string lexeme(src_.substr(begin, i_ - begin));
    double value = 0;
    auto [ptr, ec] = std::from_chars(lexeme.data(), lexeme.data() + lexeme.size(), value);
    if (ec != std::errc() || ptr != lexeme.data() + lexeme.size() || !std::isfinite(value)) {
      throw LexError("numeric literal '" + lexeme + "' is not a finite number", start);
    }
    return {TokenKind::Number, std::move(lexeme), start};
  }

  Token identifier(SourcePos start) {
    std::size_t begin = i_;
    while (i_ < src_.size() && is_ident_char(src_[i_])) advance();
    std::string lexeme(src_.substr(begin, i_ - begin));
    TokenKind kind = TokenKind::Ident;
    if (lexeme == "if") kind = TokenKind::If;
    else if (lexeme == "else") kind = TokenKind::Else;
    else if (lexeme == "function") kind = TokenKind::Function;
    return {kind, std::move(lexeme), start};
  }

  Token string(SourcePos start) {
    advance();  // opening quote
    std::string text;
    while (true) {
      if (i_ >= src_.size()) throw LexError("unterminated string literal", start);
      char c = src_[i_];
      if (c == '"') {
        advance();
        break;
      }
      if (c == '\\' && i_ + 1 < src_.size()) {
        char e = src_[i_ + 1];
        advance();
        advance();
        switch (e) {
          case '"': text += '"'; break;
          case '\\': text += '\\'; break;
          case 'n': text += '\n'; break;
          case 't': text += '\t'; break;
          default:
            text += '\\';
            text += e;
        }
        continue;
      }
      text += c;
      advance();
    }
    return {TokenKind::String, std::move(text), start};
  }

  Token punctuation(SourcePos start) {
    char c = src_[i_];
    auto single = [&](TokenKind kind) {
      advance();
      return Token{kind, std::string(1, c), start};
    };
    switch (c) {
      case '(': return single(TokenKind::LParen);
      case ')': return single(TokenKind::RParen);
      case '{': return single(TokenKind::LBrace);
      case '}': return single(TokenKind::RBrace);
      case ',': return single(TokenKind::Comma);
      case '$': return single(TokenKind::Dollar);
      case ':': return single(TokenKind::Colon);
      case ';': return single(TokenKind::Semicolon);
      case '+':
      case '-':
      case '/': return single(TokenKind::Op);
      case '^':
        advance();
        return {TokenKind::Op, "**", start};
      case '*':
        advance();
        if (peek(0) == '*') {
          advance();
          return {TokenKind::Op, "**", start};
        }
        return {TokenKind::Op, "*", start};
      case '<':
        if (peek(1) == '-') {
          advance();
          advance();
          return {TokenKind::Arrow, "<-", start};
        }
        break;
      case '%':
        if (src_.substr(i_, 4) == "%in%") {
          for (int k = 0; k < 4; ++k) advance();
          return {TokenKind::InOp, "%in%", start};
        }
        break;
      default:
        break;
    }
    std::string shown;
    if (static_cast<unsigned char>(c) < 0x20 || static_cast<unsigned char>(c) >= 0x7f) {
      char hex[8];
      std::snprintf(hex, sizeof hex, "\\x%02x", static_cast<unsigned char>(c));
      shown = hex;
    } else {
      shown = std::string(1, c);
    }
    throw LexError("illegal character '" + shown + "'", start);
  }

  std::string_view src_;
  std::size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

}  // namespace

std::vector<Token> tokenize(std::string_view source) { return Lexer(source).run(); }

}  // namespace s3lite
