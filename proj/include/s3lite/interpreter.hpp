#pragma once

#include <cstddef>
#include <deque>
#include <functional>
#include <map>
#include <memory>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "s3lite/ast.hpp"
#include "s3lite/diagnostics.hpp"
#include "s3lite/dispatch.hpp"
#include "s3lite/environment.hpp"
#include "s3lite/value.hpp"

namespace s3lite {

/// One active closure call.
struct CallFrame {
  std::string callee;
  std::vector<Value> args;               // evaluated, positional
  std::vector<std::string> arg_sources;  // call-site source of each argument
  std::shared_ptr<Environment> env;
  SourcePos call_site;
  std::size_t depth = 0;

  /// "callee(arg1, arg2)" as written at the call site.
  std::string render_context() const;
};

class Interpreter;

/// Arguments handed to a native builtin.
struct BuiltinCall {
  Interpreter& interp;
  std::string_view name;
  std::vector<Value>& args;
  const std::vector<std::string>& arg_sources;
  const std::shared_ptr<Environment>& env;  // caller's environment
  SourcePos pos;

  const Value& arg(std::size_t i) const;
  void expect_args(std::size_t min, std::size_t max) const;
};

using BuiltinFn = std::function<Value(BuiltinCall&)>;

/// Thrown by UseMethod to hand a method's result back to the generic's
/// call frame.
struct MethodTransfer {
  std::size_t depth;
  Value value;
  bool visible;
};

/// Tree-walking evaluator. Evaluation is strict: each argument expression
/// is evaluated exactly once, left to right, before the call.
class Interpreter {
 public:
  static constexpr std::size_t kMaxDepth = 400;

  Interpreter(DiagnosticSink& sink, std::ostream& out);

  const std::shared_ptr<Environment>& global() const { return global_; }

  /// Registers `fn` and binds `name` to it in the global environment.
  void define_builtin(const std::string& name, BuiltinFn fn);
  const BuiltinFn* find_builtin(std::string_view name) const;

  Value eval(const ast::Node& node, const std::shared_ptr<Environment>& env);

  /// Evaluates a Block's statements in order and returns the last value.
  /// The first runtime error propagates.
  Value eval_program(const ast::Node& program, const std::shared_ptr<Environment>& env);

  /// Calls a closure or builtin. Extra arguments beyond a closure's
  /// parameters are ignored; parameters without an argument error on use.
  Value apply(const Value& callee, std::vector<Value> args, std::vector<std::string> arg_sources,
              std::string callee_name, const std::shared_ptr<Environment>& caller_env,
              SourcePos pos = {});

  /// Reports a warning attributed to the innermost call frame.
  void warn(const std::string& message);

  /// Whether the last evaluated value should auto-print.
  bool visible() const { return visible_; }
  void set_visible(bool visible) { visible_ = visible; }

  const CallFrame* current_frame() const { return frames_.empty() ? nullptr : &frames_.back(); }
  std::size_t depth() const { return frames_.size(); }

  std::ostream& out() { return out_; }
  DiagnosticSink& sink() { return sink_; }

  using DispatchObserver = std::function<void(const DispatchOutcome&)>;
  void set_dispatch_observer(DispatchObserver observer) { observer_ = std::move(observer); }
  void notify_dispatch(const DispatchOutcome& outcome) const {
    if (observer_) observer_(outcome);
  }

 private:
  Value eval_call(const ast::Call& call, const std::shared_ptr<Environment>& env, SourcePos pos);
  Value eval_assign(const ast::Assign& assign, const std::shared_ptr<Environment>& env);
  Value eval_replacement(const ast::ReplacementAssign& node,
                         const std::shared_ptr<Environment>& env);
  Value apply_closure(const Closure& closure, std::vector<Value> args,
                      std::vector<std::string> arg_sources, std::string callee_name,
                      SourcePos pos);

  DiagnosticSink& sink_;
  std::ostream& out_;
  std::shared_ptr<Environment> global_;
  std::map<std::string, BuiltinFn, std::less<>> builtins_;
  std::deque<CallFrame> frames_;
  bool visible_ = true;
  DispatchObserver observer_;
};

/// Element-wise arithmetic with length-1 broadcasting. Throws RuntimeError
/// on non-numeric operands or mismatched lengths.
Value arithmetic(ast::BinaryOp op, const Value& lhs, const Value& rhs);

/// `lhs %in% rhs`: one logical per element of lhs.
Value membership(const Value& lhs, const Value& rhs);

/// `from:to` with unit steps.
Value sequence(const Value& from, const Value& to);

/// Condition of an `if`: a single logical or number.
bool truthy(const Value& v);

}  // namespace s3lite
