#include "s3lite/interpreter.hpp"

#include <algorithm>
#include <cmath>

#include "s3lite/errors.hpp"
#include "s3lite/format.hpp"
#include "s3lite/printer.hpp"

namespace s3lite {

using namespace ast;

std::string CallFrame::render_context() const {
  std::string out = callee + "(";
  for (std::size_t i = 0; i < arg_sources.size(); ++i) {
    if (i > 0) out += ", ";
    out += arg_sources[i];
  }
  return out + ")";
}

const Value& BuiltinCall::arg(std::size_t i) const {
  if (i >= args.size()) {
    throw RuntimeError("argument " + std::to_string(i + 1) + " to " + std::string(name) +
                       "() is missing");
  }
  return args[i];
}

void BuiltinCall::expect_args(std::size_t min, std::size_t max) const {
  if (args.size() < min || args.size() > max) {
    std::string want = min == max ? std::to_string(min)
                                  : std::to_string(min) + " to " + std::to_string(max);
    throw RuntimeError(std::to_string(args.size()) + " arguments passed to " + std::string(name) +
                       "() which requires " + want);
  }
}

namespace {

std::vector<double> numeric_operand(const Value& v) {
  if (const auto* n = v.get_if<NumericVector>()) return n->items;
  if (const auto* l = v.get_if<LogicalVector>()) {
    std::vector<double> out;
    out.reserve(l->items.size());
    for (bool b : l->items) out.push_back(b ? 1.0 : 0.0);
    return out;
  }
  if (v.is<Null>()) return {};
  throw RuntimeError("non-numeric argument to binary operator");
}

double apply_op(BinaryOp op, double a, double b) {
  switch (op) {
    case BinaryOp::Add: return a + b;
    case BinaryOp::Sub: return a - b;
    case BinaryOp::Mul: return a * b;
    case BinaryOp::Div: return a / b;
    case BinaryOp::Pow: return std::pow(a, b);
    default: break;
  }
  throw RuntimeError("unsupported arithmetic operator");
}

// Returns a copy of `root` with `value` stored at the field path.
Value store_field(Value root, const std::vector<std::string>& path, std::size_t i,
                  Value value) {
  if (root.is<Null>()) root = Value::record();
  auto* rec = root.get_if<Record>();
  if (rec == nullptr) {
    throw RuntimeError("cannot assign field '" + path[i] + "' of a " +
                       std::string(type_name(root)) + " value");
  }
  if (i + 1 == path.size()) {
    if (value.is<Null>()) {
      rec->fields.erase(path[i]);
    } else {
      rec->fields.set(path[i], std::move(value));
    }
    return root;
  }
  Value child;
  if (const Value* existing = rec->fields.find(path[i])) child = *existing;
  rec->fields.set(path[i], store_field(std::move(child), path, i + 1, std::move(value)));
  return root;
}

// Ident-rooted `$` chain -> root name and field path.
std::string flatten_target(const Node& target, std::vector<std::string>& path) {
  if (const auto* id = target.get_if<Ident>()) return id->name;
  const auto& fa = std::get<FieldAccess>(target.kind);
  std::string root = flatten_target(*fa.object, path);
  path.push_back(fa.field);
  return root;
}

class FrameGuard {
 public:
  explicit FrameGuard(std::deque<CallFrame>& frames) : frames_(frames) {}
  ~FrameGuard() { frames_.pop_back(); }
  FrameGuard(const FrameGuard&) = delete;
  FrameGuard& operator=(const FrameGuard&) = delete;

 private:
  std::deque<CallFrame>& frames_;
};

}  // namespace

Value arithmetic(BinaryOp op, const Value& lhs, const Value& rhs) {
  std::vector<double> a = numeric_operand(lhs);
  std::vector<double> b = numeric_operand(rhs);
  if (a.empty() || b.empty()) return Value::numbers({});
  std::size_t n = std::max(a.size(), b.size());
  if (a.size() != b.size() && a.size() != 1 && b.size() != 1) {
    throw RuntimeError("operand lengths differ (" + std::to_string(a.size()) + " vs " +
                       std::to_string(b.size()) + ")");
  }
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = apply_op(op, a[a.size() == 1 ? 0 : i], b[b.size() == 1 ? 0 : i]);
  }
  return Value::numbers(std::move(out));
}

Value membership(const Value& lhs, const Value& rhs) {
  std::vector<std::string> needles = as_character(lhs);
  std::vector<std::string> haystack = as_character(rhs);
  LogicalVector out;
  for (const auto& n : needles) {
    out.items.push_back(std::find(haystack.begin(), haystack.end(), n) != haystack.end());
  }
  return Value{std::move(out)};
}

Value sequence(const Value& from, const Value& to) {
  std::vector<double> a = numeric_operand(from);
  std::vector<double> b = numeric_operand(to);
  if (a.empty() || b.empty()) throw RuntimeError("argument of length 0");
  if (!std::isfinite(a[0]) || !std::isfinite(b[0])) throw RuntimeError("NA/NaN argument");
  double span = std::floor(std::fabs(b[0] - a[0]) + 1e-10);
  if (span > 1e8) throw RuntimeError("result would be too long a vector");
  double step = b[0] >= a[0] ? 1.0 : -1.0;
  std::vector<double> out;
  for (double k = 0; k <= span; ++k) out.push_back(a[0] + step * k);
  return Value::numbers(std::move(out));
}

bool truthy(const Value& v) {
  std::size_t n = length_of(v);
  if (v.is<Null>() || n == 0) throw RuntimeError("argument is of length zero");
  if (n > 1) throw RuntimeError("the condition has length > 1");
  if (const auto* l = v.get_if<LogicalVector>()) return l->items[0];
  if (const auto* d = v.get_if<NumericVector>()) {
    if (std::isnan(d->items[0])) throw RuntimeError("missing value where TRUE/FALSE needed");
    return d->items[0] != 0;
  }
  throw RuntimeError("argument is not interpretable as logical");
}

Interpreter::Interpreter(DiagnosticSink& sink, std::ostream& out)
    : sink_(sink), out_(out), global_(std::make_shared<Environment>()) {}

void Interpreter::define_builtin(const std::string& name, BuiltinFn fn) {
  builtins_.insert_or_assign(name, std::move(fn));
  global_->define(name, Value{Builtin{name}});
}

const BuiltinFn* Interpreter::find_builtin(std::string_view name) const {
  auto it = builtins_.find(name);
  return it == builtins_.end() ? nullptr : &it->second;
}

void Interpreter::warn(const std::string& message) {
  out_.flush();
  std::string context = frames_.empty() ? std::string() : frames_.back().render_context();
  sink_.report(Diagnostic{Severity::Warning, message, std::move(context)});
}

Value Interpreter::eval_program(const Node& program, const std::shared_ptr<Environment>& env) {
  const auto* block = program.get_if<Block>();
  if (block == nullptr) return eval(program, env);
  Value last;
  visible_ = false;
  for (const auto& stmt : block->statements) last = eval(*stmt, env);
  return last;
}

Value Interpreter::eval(const Node& node, const std::shared_ptr<Environment>& env) {
  struct Visitor {
    Interpreter& self;
    const std::shared_ptr<Environment>& env;
    SourcePos pos;

    Value operator()(const NumberLit& n) const {
      self.visible_ = true;
      return Value::number(n.value);
    }
    Value operator()(const StringLit& s) const {
      self.visible_ = true;
      return Value::string(s.value);
    }
    Value operator()(const Ident& id) const {
      Value v = env->lookup(id.name);
      self.visible_ = true;
      return v;
    }
    Value operator()(const Assign& a) const { return self.eval_assign(a, env); }
    Value operator()(const FieldAccess& f) const {
      Value object = self.eval(*f.object, env);
      self.visible_ = true;
      if (object.is<Null>()) return Value::null();
      const auto* rec = object.get_if<Record>();
      if (rec == nullptr) throw RuntimeError("$ operator is invalid for atomic vectors");
      if (const Value* field = rec->fields.find(f.field)) return *field;
      return Value::null();
    }
    Value operator()(const Call& c) const { return self.eval_call(c, env, pos); }
    Value operator()(const FunctionDef& f) const {
      self.visible_ = true;
      return Value{Closure{f.params, f.body, env}};
    }
    Value operator()(const Block& b) const {
      Value last;
      self.visible_ = true;
      for (const auto& stmt : b.statements) last = self.eval(*stmt, env);
      return last;
    }
    Value operator()(const If& i) const {
      Value cond = self.eval(*i.cond, env);
      if (truthy(cond)) return self.eval(*i.then_branch, env);
      if (i.else_branch) return self.eval(*i.else_branch, env);
      self.visible_ = false;
      return Value::null();
    }
    Value operator()(const Binary& b) const {
      Value lhs = self.eval(*b.lhs, env);
      Value rhs = self.eval(*b.rhs, env);
      self.visible_ = true;
      switch (b.op) {
        case BinaryOp::In: return membership(lhs, rhs);
        case BinaryOp::Range: return sequence(lhs, rhs);
        default: return arithmetic(b.op, lhs, rhs);
      }
    }
    Value operator()(const Negate& n) const {
      Value operand = self.eval(*n.operand, env);
      self.visible_ = true;
      return arithmetic(BinaryOp::Sub, Value::number(0), operand);
    }
    Value operator()(const ReplacementAssign& r) const { return self.eval_replacement(r, env); }
  };
  return std::visit(Visitor{*this, env, node.pos}, node.kind);
}

Value Interpreter::eval_assign(const Assign& assign, const std::shared_ptr<Environment>& env) {
  Value value = eval(*assign.value, env);
  std::vector<std::string> path;
  std::string root = flatten_target(*assign.target, path);
  if (path.empty()) {
    env->define(root, value);
  } else {
    Value current = env->lookup(root);
    env->define(root, store_field(std::move(current), path, 0, value));
  }
  visible_ = false;
  return value;
}

Value Interpreter::eval_replacement(const ReplacementAssign& node,
                                    const std::shared_ptr<Environment>& env) {
  Value rhs = eval(*node.value, env);
  std::vector<Value> extra;
  for (const auto& arg : node.extra) extra.push_back(eval(*arg, env));
  Value target = env->lookup(node.target);

  std::string attribute = "class";
  if (node.function == "attr") {
    const auto* name = extra.empty() ? nullptr : extra[0].get_if<StringVector>();
    if (name == nullptr || name->items.size() != 1 || name->items[0].empty()) {
      throw RuntimeError("attr() replacement needs a single attribute name");
    }
    attribute = name->items[0];
  }

  if (rhs.is<Null>()) {
    target.attributes.erase(attribute);
  } else if (attribute == "class") {
    const auto* classes = rhs.get_if<StringVector>();
    if (classes == nullptr) throw RuntimeError("class must be a character vector");
    target = set_class(std::move(target), ClassVector{classes->items});
  } else {
    target.attributes.set(attribute, rhs);
  }
  env->define(node.target, std::move(target));
  visible_ = false;
  return rhs;
}

Value Interpreter::eval_call(const Call& call, const std::shared_ptr<Environment>& env,
                             SourcePos pos) {
  std::string callee_name;
  Value callee;
  if (const auto* id = call.callee->get_if<Ident>()) {
    callee_name = id->name;
    const Value* fn = find_function(*env, id->name);
    if (fn == nullptr) throw RuntimeError("could not find function \"" + id->name + "\"");
    callee = *fn;
  } else {
    callee_name = pretty_print(*call.callee);
    callee = eval(*call.callee, env);
  }

  std::vector<Value> args;
  std::vector<std::string> sources;
  args.reserve(call.args.size());
  sources.reserve(call.args.size());
  for (const auto& arg : call.args) {
    args.push_back(eval(*arg, env));
    sources.push_back(pretty_print(*arg));
  }
  return apply(callee, std::move(args), std::move(sources), std::move(callee_name), env, pos);
}

Value Interpreter::apply(const Value& callee, std::vector<Value> args,
                         std::vector<std::string> arg_sources, std::string callee_name,
                         const std::shared_ptr<Environment>& caller_env, SourcePos pos) {
  if (const auto* closure = callee.get_if<Closure>()) {
    return apply_closure(*closure, std::move(args), std::move(arg_sources), std::move(callee_name),
                         pos);
  }
  if (const auto* builtin = callee.get_if<Builtin>()) {
    const BuiltinFn* fn = find_builtin(builtin->name);
    if (fn == nullptr) throw RuntimeError("unknown builtin '" + builtin->name + "'");
    visible_ = true;
    BuiltinCall call{*this, builtin->name, args, arg_sources, caller_env, pos};
    return (*fn)(call);
  }
  throw RuntimeError("attempt to apply non-function");
}

Value Interpreter::apply_closure(const Closure& closure, std::vector<Value> args,
                                 std::vector<std::string> arg_sources, std::string callee_name,
                                 SourcePos pos) {
  if (frames_.size() >= kMaxDepth) {
    throw RuntimeError("evaluation nested too deeply: infinite recursion?");
  }
  auto frame_env = std::make_shared<Environment>(closure.env);
  for (std::size_t i = 0; i < closure.params.size(); ++i) {
    if (i < args.size()) {
      frame_env->define(closure.params[i], args[i]);
    } else {
      frame_env->define_missing(closure.params[i]);
    }
  }
  std::size_t depth = frames_.size() + 1;
  frames_.push_back(CallFrame{std::move(callee_name), std::move(args), std::move(arg_sources),
                              frame_env, pos, depth});
  FrameGuard guard(frames_);
  try {
    return eval(*closure.body, frame_env);
  } catch (MethodTransfer& transfer) {
    if (transfer.depth != depth) throw;
    visible_ = transfer.visible;
    return std::move(transfer.value);
  } catch (RuntimeError& error) {
    if (!error.has_context()) error.set_context(frames_.back().render_context());
    throw;
  }
}

}  // namespace s3lite
