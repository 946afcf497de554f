#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "s3lite/environment.hpp"
#include "s3lite/value.hpp"

namespace s3lite {

class Interpreter;

/// Result of resolving a generic against a receiver's class vector.
///
/// `candidates_tried` is `generic.c` for each class in order, followed by
/// `generic.default`, truncated right after the first hit; when present,
/// `chosen` equals its last element.
struct DispatchOutcome {
  std::string generic;
  ClassVector receiver_classes;
  std::vector<std::string> candidates_tried;
  std::optional<std::string> chosen;
};

/// First binding of `name` on the environment chain that holds a function.
/// Non-function bindings with the same name are skipped.
const Value* find_function(const Environment& env, std::string_view name);

/// Scans `classes` left to right for a bound `generic.<class>` function,
/// then `generic.default`. Pure; never throws.
DispatchOutcome resolve_method(std::string_view generic, const ClassVector& classes,
                               const Environment& env);

/// Sorted, de-duplicated names `generic.*` bound to functions anywhere on
/// the chain, excluding `generic` itself.
std::vector<std::string> methods_of(std::string_view generic, const Environment& env);

/// `cls` is a member of get_class(v).
bool inherits(const Value& v, std::string_view cls);

/// Implements `UseMethod(generic)` from inside a closure: dispatches on the
/// first argument of the innermost call frame, applies the chosen method to
/// that frame's original arguments, and abandons the rest of the caller's
/// body. Does not return normally.
[[noreturn]] void use_method(Interpreter& interp, std::string_view generic, const Environment& env);

}  // namespace s3lite
