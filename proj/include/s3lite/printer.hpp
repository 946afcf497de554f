#pragma once

#include <string>

#include "s3lite/ast.hpp"

namespace s3lite {

/// Canonical source for one expression. Parentheses are emitted only where
/// precedence or a dangling `else` requires them, so re-parsing the output
/// yields a structurally equal tree.
std::string pretty_print(const ast::Node& node);

/// Canonical source for a top-level program: the Block's statements, one per
/// line, without enclosing braces.
std::string pretty_print_program(const ast::Node& program);

/// Double-quoted literal with `\\`, `\"`, `\n` and `\t` escapes.
std::string quote_string(const std::string& text);

}  // namespace s3lite
