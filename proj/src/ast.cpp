#include "s3lite/ast.hpp"

namespace s3lite::ast {

std::string_view op_symbol(BinaryOp op) {
  switch (op) {
    case BinaryOp::Add: return "+";
    case BinaryOp::Sub: return "-";
    case BinaryOp::Mul: return "*";
    case BinaryOp::Div: return "/";
    case BinaryOp::Pow: return "**";
    case BinaryOp::Range: return ":";
    case BinaryOp::In: return "%in%";
  }
  return "?";
}

namespace {

bool equal_lists(const std::vector<NodePtr>& a, const std::vector<NodePtr>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!structurally_equal(a[i], b[i])) return false;
  }
  return true;
}

struct EqualVisitor {
  const NodeKind& other;

  template <typename T>
  const T& rhs() const { return std::get<T>(other); }

  bool operator()(const NumberLit& a) const { return a.value == rhs<NumberLit>().value; }
  bool operator()(const StringLit& a) const { return a.value == rhs<StringLit>().value; }
  bool operator()(const Ident& a) const { return a.name == rhs<Ident>().name; }
  bool operator()(const Assign& a) const {
    const auto& b = rhs<Assign>();
    return structurally_equal(a.target, b.target) && structurally_equal(a.value, b.value);
  }
  bool operator()(const FieldAccess& a) const {
    const auto& b = rhs<FieldAccess>();
    return a.field == b.field && structurally_equal(a.object, b.object);
  }
  bool operator()(const Call& a) const {
    const auto& b = rhs<Call>();
    return structurally_equal(a.callee, b.callee) && equal_lists(a.args, b.args);
  }
  bool operator()(const FunctionDef& a) const {
    const auto& b = rhs<FunctionDef>();
    return a.params == b.params && structurally_equal(a.body, b.body);
  }
  bool operator()(const Block& a) const { return equal_lists(a.statements, rhs<Block>().statements); }
  bool operator()(const If& a) const {
    const auto& b = rhs<If>();
    return structurally_equal(a.cond, b.cond) && structurally_equal(a.then_branch, b.then_branch) &&
           structurally_equal(a.else_branch, b.else_branch);
  }
  bool operator()(const Binary& a) const {
    const auto& b = rhs<Binary>();
    return a.op == b.op && structurally_equal(a.lhs, b.lhs) && structurally_equal(a.rhs, b.rhs);
  }
  bool operator()(const Negate& a) const {
    return structurally_equal(a.operand, rhs<Negate>().operand);
  }
  bool operator()(const ReplacementAssign& a) const {
    const auto& b = rhs<ReplacementAssign>();
    return a.function == b.function && a.target == b.target && equal_lists(a.extra, b.extra) &&
           structurally_equal(a.value, b.value);
  }
};

}  // namespace

bool structurally_equal(const Node& a, const Node& b) {
  if (a.kind.index() != b.kind.index()) return false;
  return std::visit(EqualVisitor{b.kind}, a.kind);
}

bool structurally_equal(const NodePtr& a, const NodePtr& b) {
  if (!a || !b) return !a && !b;
  return structurally_equal(*a, *b);
}

}  // namespace s3lite::ast
