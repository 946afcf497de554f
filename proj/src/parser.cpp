#include "s3lite/parser.hpp"

#include <algorithm>
#include <charconv>

namespace s3lite {

using namespace ast;

bool is_replacement_function(std::string_view name) { return name == "class" || name == "attr"; }

namespace {

enum class Context { TopLevel, Brace, Paren };

std::string describe(const Token& tok) {
  switch (tok.kind) {
    case TokenKind::Ident: return "identifier '" + tok.lexeme + "'";
    case TokenKind::Number: return "number " + tok.lexeme;
    case TokenKind::String: return "string \"" + tok.lexeme + "\"";
    case TokenKind::Op: return "'" + tok.lexeme + "'";
    default: return std::string(token_kind_name(tok.kind));
  }
}

bool is_separator(TokenKind kind) {
  return kind == TokenKind::Newline || kind == TokenKind::Semicolon;
}

// Ident or x$a$b... rooted at an Ident.
bool is_assignable(const Node& node) {
  if (node.is<Ident>()) return true;
  if (const auto* fa = node.get_if<FieldAccess>()) return is_assignable(*fa->object);
  return false;
}

class Parser {
 public:
  explicit Parser(const std::vector<Token>& tokens) : toks_(tokens) {}

  NodePtr program() {
    std::vector<NodePtr> statements;
    statement_list(statements, TokenKind::Eof);
    expect(TokenKind::Eof, "end of input");
    return make(Block{std::move(statements)}, SourcePos{1, 1});
  }

 private:
  const Token& cur() {
    if (ctx_.back() == Context::Paren) {
      while (toks_[i_].kind == TokenKind::Newline) ++i_;
    }
    return toks_[i_];
  }

  const Token& take() {
    const Token& tok = cur();
    if (tok.kind != TokenKind::Eof) ++i_;
    return tok;
  }

  bool at(TokenKind kind) { return cur().kind == kind; }
  bool at_op(std::string_view lexeme) {
    const Token& tok = cur();
    return tok.kind == TokenKind::Op && tok.lexeme == lexeme;
  }

  void skip_newlines() {
    while (toks_[i_].kind == TokenKind::Newline) ++i_;
  }

  void skip_separators() {
    while (is_separator(toks_[i_].kind)) ++i_;
  }

  [[noreturn]] void fail_expected(std::string_view what) {
    const Token& tok = cur();
    throw SyntaxError("expected " + std::string(what) + ", found " + describe(tok), tok.pos,
                      tok.kind == TokenKind::Eof);
  }

  const Token& expect(TokenKind kind, std::string_view what) {
    if (!at(kind)) fail_expected(what);
    return take();
  }

  void statement_list(std::vector<NodePtr>& out, TokenKind terminator) {
    skip_separators();
    while (!at(terminator)) {
      out.push_back(expression());
      if (at(terminator)) break;
      if (!is_separator(cur().kind)) fail_expected("newline or ';'");
      skip_separators();
    }
  }

  NodePtr expression() { return assignment(); }

  class NestingGuard {
   public:
    NestingGuard(Parser& parser) : parser_(parser) {
      if (++parser_.nesting_ > kMaxNesting) {
        throw SyntaxError("expression nested too deeply", parser_.cur().pos, false);
      }
    }
    ~NestingGuard() { --parser_.nesting_; }
    NestingGuard(const NestingGuard&) = delete;
    NestingGuard& operator=(const NestingGuard&) = delete;

   private:
    Parser& parser_;
  };

  NodePtr assignment() {
    NestingGuard guard(*this);
    NodePtr lhs = membership();
    if (!at(TokenKind::Arrow)) return lhs;
    SourcePos arrow = take().pos;
    skip_newlines();
    NodePtr rhs = assignment();
    return make_assignment(lhs, std::move(rhs), arrow);
  }

  NodePtr make_assignment(const NodePtr& lhs, NodePtr rhs, SourcePos arrow) {
    if (is_assignable(*lhs)) return make(Assign{lhs, std::move(rhs)}, lhs->pos);
    if (const auto* call = lhs->get_if<Call>()) {
      const auto* callee = call->callee->get_if<Ident>();
      if (callee == nullptr || !is_replacement_function(callee->name)) {
        std::string name = callee ? "'" + callee->name + "'" : "this expression";
        throw SyntaxError("invalid assignment target: " + name +
                              " is not a replacement function (only class and attr)",
                          lhs->pos, false);
      }
      const auto* target =
          call->args.empty() ? nullptr : call->args.front()->get_if<Ident>();
      if (target == nullptr) {
        throw SyntaxError("invalid assignment target: " + callee->name +
                              "() replacement needs a variable as its first argument",
                          lhs->pos, false);
      }
      std::vector<NodePtr> extra(call->args.begin() + 1, call->args.end());
      return make(ReplacementAssign{callee->name, target->name, std::move(extra), std::move(rhs)},
                  lhs->pos);
    }
    throw SyntaxError("invalid assignment target", arrow, false);
  }

  NodePtr membership() {
    NodePtr lhs = additive();
    while (at(TokenKind::InOp)) {
      take();
      skip_newlines();
      NodePtr rhs = additive();
      SourcePos p = lhs->pos;
      lhs = make(Binary{BinaryOp::In, lhs, std::move(rhs)}, p);
    }
    return lhs;
  }

  NodePtr additive() {
    NodePtr lhs = multiplicative();
    while (at_op("+") || at_op("-")) {
      BinaryOp op = take().lexeme == "+" ? BinaryOp::Add : BinaryOp::Sub;
      skip_newlines();
      NodePtr rhs = multiplicative();
      SourcePos p = lhs->pos;
      lhs = make(Binary{op, lhs, std::move(rhs)}, p);
    }
    return lhs;
  }

  NodePtr multiplicative() {
    NodePtr lhs = range();
    while (at_op("*") || at_op("/")) {
      BinaryOp op = take().lexeme == "*" ? BinaryOp::Mul : BinaryOp::Div;
      skip_newlines();
      NodePtr rhs = range();
      SourcePos p = lhs->pos;
      lhs = make(Binary{op, lhs, std::move(rhs)}, p);
    }
    return lhs;
  }

  NodePtr range() {
    NodePtr lhs = unary();
    while (at(TokenKind::Colon)) {
      take();
      skip_newlines();
      NodePtr rhs = unary();
      SourcePos p = lhs->pos;
      lhs = make(Binary{BinaryOp::Range, lhs, std::move(rhs)}, p);
    }
    return lhs;
  }

  NodePtr unary() {
    NestingGuard guard(*this);
    if (at_op("-")) {
      SourcePos p = take().pos;
      skip_newlines();
      return make(Negate{unary()}, p);
    }
    return power();
  }

  NodePtr power() {
    NodePtr base = postfix();
    if (!at_op("**")) return base;
    take();
    skip_newlines();
    NodePtr exponent = unary();
    SourcePos p = base->pos;
    return make(Binary{BinaryOp::Pow, std::move(base), std::move(exponent)}, p);
  }

  NodePtr postfix() {
    NodePtr node = primary();
    while (true) {
      if (at(TokenKind::LParen)) {
        SourcePos p = node->pos;
        node = make(Call{node, call_args()}, p);
      } else if (at(TokenKind::Dollar)) {
        take();
        const Token& field = expect(TokenKind::Ident, "field name after '$'");
        SourcePos p = node->pos;
        node = make(FieldAccess{node, field.lexeme}, p);
      } else {
        return node;
      }
    }
  }

  std::vector<NodePtr> call_args() {
    take();  // (
    ctx_.push_back(Context::Paren);
    std::vector<NodePtr> args;
    if (!at(TokenKind::RParen)) {
      args.push_back(expression());
      while (at(TokenKind::Comma)) {
        take();
        args.push_back(expression());
      }
    }
    expect(TokenKind::RParen, "',' or ')'");
    ctx_.pop_back();
    return args;
  }

  NodePtr primary() {
    const Token& tok = cur();
    switch (tok.kind) {
      case TokenKind::Number: {
        take();
        double value = 0;
        std::from_chars(tok.lexeme.data(), tok.lexeme.data() + tok.lexeme.size(), value);
        return make(NumberLit{value}, tok.pos);
      }
      case TokenKind::String:
        take();
        return make(StringLit{tok.lexeme}, tok.pos);
      case TokenKind::Ident:
        take();
        return make(Ident{tok.lexeme}, tok.pos);
      case TokenKind::LParen: {
        take();
        ctx_.push_back(Context::Paren);
        NodePtr inner = expression();
        expect(TokenKind::RParen, "')'");
        ctx_.pop_back();
        return inner;
      }
      case TokenKind::LBrace: return block();
      case TokenKind::If: return if_expression();
      case TokenKind::Function: return function_definition();
      default: fail_expected("expression");
    }
  }

  NodePtr block() {
    SourcePos p = take().pos;
    ctx_.push_back(Context::Brace);
    std::vector<NodePtr> statements;
    statement_list(statements, TokenKind::RBrace);
    expect(TokenKind::RBrace, "'}'");
    ctx_.pop_back();
    return make(Block{std::move(statements)}, p);
  }

  NodePtr if_expression() {
    SourcePos p = take().pos;
    ctx_.push_back(Context::Paren);
    expect(TokenKind::LParen, "'(' after 'if'");
    NodePtr cond = expression();
    expect(TokenKind::RParen, "')'");
    ctx_.pop_back();
    skip_newlines();
    NodePtr then_branch = expression();

    NodePtr else_branch;
    std::size_t save = i_;
    if (ctx_.back() == Context::Brace) skip_newlines();
    if (at(TokenKind::Else)) {
      take();
      skip_newlines();
      else_branch = expression();
    } else {
      i_ = save;
    }
    return make(If{std::move(cond), std::move(then_branch), std::move(else_branch)}, p);
  }

  NodePtr function_definition() {
    SourcePos p = take().pos;
    ctx_.push_back(Context::Paren);
    expect(TokenKind::LParen, "'(' after 'function'");
    std::vector<std::string> params;
    if (!at(TokenKind::RParen)) {
      while (true) {
        const Token& name = expect(TokenKind::Ident, "parameter name");
        if (std::find(params.begin(), params.end(), name.lexeme) != params.end()) {
          throw SyntaxError("repeated parameter '" + name.lexeme + "'", name.pos, false);
        }
        params.push_back(name.lexeme);
        if (!at(TokenKind::Comma)) break;
        take();
      }
    }
    expect(TokenKind::RParen, "',' or ')'");
    ctx_.pop_back();
    skip_newlines();
    NodePtr body = expression();
    return make(FunctionDef{std::move(params), std::move(body)}, p);
  }

  const std::vector<Token>& toks_;
  static constexpr int kMaxNesting = 500;

  std::size_t i_ = 0;
  int nesting_ = 0;
  std::vector<Context> ctx_{Context::TopLevel};
};

}  // namespace

NodePtr parse(const std::vector<Token>& tokens) {
  if (tokens.empty() || tokens.back().kind != TokenKind::Eof) {
    throw SyntaxError("token stream must end with end of input", SourcePos{}, false);
  }
  return Parser(tokens).program();
}

NodePtr parse_source(std::string_view source) { return parse(tokenize(source)); }

}  // namespace s3lite
