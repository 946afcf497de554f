#include "s3lite/dispatch.hpp"

#include <algorithm>
#include <set>

#include "s3lite/errors.hpp"
#include "s3lite/interpreter.hpp"

namespace s3lite {

const Value* find_function(const Environment& env, std::string_view name) {
  for (const Environment* frame = &env; frame != nullptr; frame = frame->parent().get()) {
    const Value* v = frame->find_local(name);
    if (v != nullptr && v->is_function()) return v;
  }
  return nullptr;
}

DispatchOutcome resolve_method(std::string_view generic, const ClassVector& classes,
                               const Environment& env) {
  DispatchOutcome outcome{std::string(generic), classes, {}, std::nullopt};
  auto try_candidate = [&](const std::string& suffix) {
    std::string candidate = std::string(generic) + "." + suffix;
    outcome.candidates_tried.push_back(candidate);
    if (find_function(env, candidate) != nullptr) {
      outcome.chosen = std::move(candidate);
      return true;
    }
    return false;
  };
  for (const auto& cls : classes.names) {
    if (try_candidate(cls)) return outcome;
  }
  try_candidate("default");
  return outcome;
}

std::vector<std::string> methods_of(std::string_view generic, const Environment& env) {
  std::string prefix = std::string(generic) + ".";
  std::set<std::string> seen;
  std::set<std::string> found;
  for (const Environment* frame = &env; frame != nullptr; frame = frame->parent().get()) {
    for (const auto& name : frame->local_names()) {
      if (!seen.insert(name).second) continue;  // shadowed by an inner frame
      if (name.size() <= prefix.size() || name.compare(0, prefix.size(), prefix) != 0) continue;
      if (frame->find_local(name)->is_function()) found.insert(name);
    }
  }
  return {found.begin(), found.end()};
}

bool inherits(const Value& v, std::string_view cls) { return get_class(v).contains(cls); }

void use_method(Interpreter& interp, std::string_view generic, const Environment& env) {
  const CallFrame* frame = interp.current_frame();
  if (frame == nullptr) throw RuntimeError("UseMethod called from outside a function");
  if (frame->args.empty()) {
    throw RuntimeError("UseMethod(\"" + std::string(generic) + "\") called with no argument to dispatch on");
  }

  DispatchOutcome outcome = resolve_method(generic, get_class(frame->args.front()), env);
  interp.notify_dispatch(outcome);
  if (!outcome.chosen) {
    throw RuntimeError("no applicable method for '" + std::string(generic) +
                       "' applied to an object of class \"" + outcome.receiver_classes.front() +
                       "\"");
  }

  Value method = *find_function(env, *outcome.chosen);
  std::size_t depth = frame->depth;
  std::vector<Value> args = frame->args;
  std::vector<std::string> sources = frame->arg_sources;
  SourcePos site = frame->call_site;
  Value result = interp.apply(method, std::move(args), std::move(sources), *outcome.chosen,
                              frame->env, site);
  throw MethodTransfer{depth, std::move(result), interp.visible()};
}

}  // namespace s3lite
