#include "s3lite/printer.hpp"

#include <charconv>

namespace s3lite {

using namespace ast;

namespace {

// Binding strength, loosest first.
enum Prec : int {
  kStatement = 1,  // <-, if, function
  kIn = 2,
  kAdditive = 3,
  kMultiplicative = 4,
  kRange = 5,
  kUnary = 6,
  kPower = 7,
  kPostfix = 8,
  kPrimary = 9,
};

int binary_prec(BinaryOp op) {
  switch (op) {
    case BinaryOp::In: return kIn;
    case BinaryOp::Add:
    case BinaryOp::Sub: return kAdditive;
    case BinaryOp::Mul:
    case BinaryOp::Div: return kMultiplicative;
    case BinaryOp::Range: return kRange;
    case BinaryOp::Pow: return kPower;
  }
  return kPrimary;
}

int precedence(const Node& node) {
  struct Visitor {
    int operator()(const NumberLit&) const { return kPrimary; }
    int operator()(const StringLit&) const { return kPrimary; }
    int operator()(const Ident&) const { return kPrimary; }
    int operator()(const Block&) const { return kPrimary; }
    int operator()(const Call&) const { return kPostfix; }
    int operator()(const FieldAccess&) const { return kPostfix; }
    int operator()(const Binary& b) const { return binary_prec(b.op); }
    int operator()(const Negate&) const { return kUnary; }
    int operator()(const Assign&) const { return kStatement; }
    int operator()(const ReplacementAssign&) const { return kStatement; }
    int operator()(const If&) const { return kStatement; }
    int operator()(const FunctionDef&) const { return kStatement; }
  };
  return std::visit(Visitor{}, node.kind);
}

// Whether the printed form ends in an `if` with no `else`, which would
// capture a following `else`.
bool ends_with_open_if(const Node& node) {
  if (const auto* i = node.get_if<If>()) {
    return !i->else_branch || ends_with_open_if(*i->else_branch);
  }
  if (const auto* f = node.get_if<FunctionDef>()) return ends_with_open_if(*f->body);
  if (const auto* a = node.get_if<Assign>()) return ends_with_open_if(*a->value);
  if (const auto* r = node.get_if<ReplacementAssign>()) return ends_with_open_if(*r->value);
  return false;
}

std::string format_number_literal(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

class Printer {
 public:
  std::string print(const Node& node, int min_prec, int indent) {
    if (precedence(node) < min_prec) return "(" + print(node, 0, indent) + ")";
    return std::visit([&](const auto& kind) { return emit(kind, indent); }, node.kind);
  }

  std::string statements(const Block& block, int indent) {
    std::string out;
    for (const auto& stmt : block.statements) {
      out += std::string(static_cast<std::size_t>(indent), ' ');
      out += print(*stmt, 0, indent);
      out += '\n';
    }
    return out;
  }

 private:
  std::string emit(const NumberLit& n, int) { return format_number_literal(n.value); }
  std::string emit(const StringLit& s, int) { return quote_string(s.value); }
  std::string emit(const Ident& id, int) { return id.name; }

  std::string emit(const Assign& a, int indent) {
    return print(*a.target, kPostfix, indent) + " <- " + print(*a.value, kStatement, indent);
  }

  std::string emit(const FieldAccess& f, int indent) {
    return print(*f.object, kPostfix, indent) + "$" + f.field;
  }

  std::string emit(const Call& c, int indent) {
    return print(*c.callee, kPostfix, indent) + "(" + arg_list(c.args, indent) + ")";
  }

  std::string emit(const FunctionDef& f, int indent) {
    std::string out = "function(";
    for (std::size_t i = 0; i < f.params.size(); ++i) {
      if (i > 0) out += ", ";
      out += f.params[i];
    }
    return out + ") " + print(*f.body, kStatement, indent);
  }

  std::string emit(const Block& b, int indent) {
    if (b.statements.empty()) return "{}";
    return "{\n" + statements(b, indent + 2) + std::string(static_cast<std::size_t>(indent), ' ') +
           "}";
  }

  std::string emit(const If& i, int indent) {
    std::string out = "if (" + print(*i.cond, 0, indent) + ") ";
    if (!i.else_branch) return out + print(*i.then_branch, kStatement, indent);
    std::string then_text = ends_with_open_if(*i.then_branch)
                                ? "(" + print(*i.then_branch, 0, indent) + ")"
                                : print(*i.then_branch, kStatement, indent);
    return out + then_text + " else " + print(*i.else_branch, kStatement, indent);
  }

  std::string emit(const Binary& b, int indent) {
    int prec = binary_prec(b.op);
    std::string lhs;
    std::string rhs;
    switch (b.op) {
      case BinaryOp::Pow:
        lhs = print(*b.lhs, kPostfix, indent);
        rhs = print(*b.rhs, kUnary, indent);
        break;
      case BinaryOp::Range:
        lhs = print(*b.lhs, kRange, indent);
        rhs = print(*b.rhs, kUnary, indent);
        break;
      default:
        lhs = print(*b.lhs, prec, indent);
        rhs = print(*b.rhs, prec + 1, indent);
    }
    if (b.op == BinaryOp::Range) return lhs + ":" + rhs;
    return lhs + " " + std::string(op_symbol(b.op)) + " " + rhs;
  }

  std::string emit(const Negate& n, int indent) { return "-" + print(*n.operand, kUnary, indent); }

  std::string emit(const ReplacementAssign& r, int indent) {
    std::string out = r.function + "(" + r.target;
    for (const auto& arg : r.extra) out += ", " + print(*arg, 0, indent);
    return out + ") <- " + print(*r.value, kStatement, indent);
  }

  std::string arg_list(const std::vector<NodePtr>& args, int indent) {
    std::string out;
    for (std::size_t i = 0; i < args.size(); ++i) {
      if (i > 0) out += ", ";
      out += print(*args[i], 0, indent);
    }
    return out;
  }
};

}  // namespace

std::string quote_string(const std::string& text) {
  std::string out = "\"";
  for (char c : text) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      default: out += c;
    }
  }
  return out + "\"";
}

std::string pretty_print(const Node& node) { return Printer().print(node, 0, 0); }

std::string pretty_print_program(const Node& program) {
  const auto* block = program.get_if<Block>();
  if (block == nullptr) return pretty_print(program);
  std::string out = Printer().statements(*block, 0);
  if (!out.empty()) out.pop_back();
  return out;
}

}  // namespace s3lite
