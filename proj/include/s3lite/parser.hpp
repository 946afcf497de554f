#pragma once

#include <string_view>
#include <vector>

#include "s3lite/ast.hpp"
#include "s3lite/lexer.hpp"

namespace s3lite {

/// Parses a token stream into a Block of top-level statements.
///
/// Precedence, tightest first: `$` and calls, `**` (right), unary minus,
/// `:`, `* /`, `+ -`, `%in%`, `<-` (right). Statements are separated by
/// newlines or `;`. Newlines are insignificant inside parentheses and
/// after a binary operator. Inside a block an `else` may follow the `if`
/// branch on a later line; at top level it must share the line.
///
/// Throws SyntaxError with the offending position.
ast::NodePtr parse(const std::vector<Token>& tokens);

/// tokenize + parse.
ast::NodePtr parse_source(std::string_view source);

/// True for the callee names accepted on the left of `<-`.
bool is_replacement_function(std::string_view name);

}  // namespace s3lite
