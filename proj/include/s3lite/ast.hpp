#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "s3lite/errors.hpp"

namespace s3lite::ast {

struct Node;
using NodePtr = std::shared_ptr<const Node>;

enum class BinaryOp { Add, Sub, Mul, Div, Pow, Range, In };

std::string_view op_symbol(BinaryOp op);

struct NumberLit {
  double value;
};

struct StringLit {
  std::string value;
};

struct Ident {
  std::string name;
};

// target is an Ident or a FieldAccess chain rooted at an Ident.
struct Assign {
  NodePtr target;
  NodePtr value;
};

struct FieldAccess {
  NodePtr object;
  std::string field;
};

struct Call {
  NodePtr callee;
  std::vector<NodePtr> args;
};

struct FunctionDef {
  std::vector<std::string> params;
  NodePtr body;
};

struct Block {
  std::vector<NodePtr> statements;
};

struct If {
  NodePtr cond;
  NodePtr then_branch;
  NodePtr else_branch;  // may be null
};

struct Binary {
  BinaryOp op;
  NodePtr lhs;
  NodePtr rhs;
};

struct Negate {
  NodePtr operand;
};

// `class(x) <- v`, `attr(x, "n") <- v`
struct ReplacementAssign {
  std::string function;
  std::string target;
  std::vector<NodePtr> extra;
  NodePtr value;
};

using NodeKind = std::variant<NumberLit, StringLit, Ident, Assign, FieldAccess, Call, FunctionDef,
                              Block, If, Binary, Negate, ReplacementAssign>;

struct Node {
  NodeKind kind;
  SourcePos pos;

  template <typename T>
  const T* get_if() const { return std::get_if<T>(&kind); }
  template <typename T>
  bool is() const { return std::holds_alternative<T>(kind); }
};

template <typename T>
NodePtr make(T kind, SourcePos pos = {}) {
  return std::make_shared<const Node>(Node{NodeKind(std::move(kind)), pos});
}

/// Equality of tree shape and literal contents; positions are ignored.
bool structurally_equal(const Node& a, const Node& b);
bool structurally_equal(const NodePtr& a, const NodePtr& b);

}  // namespace s3lite::ast
