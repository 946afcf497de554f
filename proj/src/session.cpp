#include "s3lite/session.hpp"

#include <fstream>
#include <sstream>

#include "s3lite/errors.hpp"
#include "s3lite/format.hpp"
#include "s3lite/parser.hpp"
#include "s3lite/stdlib.hpp"

#ifndef S3L_DEFAULT_ASSET_DIR
#define S3L_DEFAULT_ASSET_DIR "assets"
#endif

namespace s3lite {

namespace {

std::string position_prefix(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.col);
}

}  // namespace

std::filesystem::path default_asset_dir() { return S3L_DEFAULT_ASSET_DIR; }

Session::Session(SessionOptions options, std::ostream& out, DiagnosticSink& sink)
    : options_(std::move(options)), out_(out), sink_(sink), interp_(sink, out) {
  install_builtins(interp_, options_.asset_dir);
  if (options_.load_prelude) load_prelude();
}

void Session::load_prelude() {
  std::filesystem::path path =
      options_.prelude_path.value_or(options_.asset_dir / "prelude.s3l");
  std::ifstream in(path, std::ios::binary);
  if (!in) throw PreludeError("cannot open prelude '" + path.string() + "'", true);
  std::ostringstream text;
  text << in.rdbuf();
  try {
    ast::NodePtr program = parse_source(text.str());
    interp_.eval_program(*program, interp_.global());
  } catch (const LexError& e) {
    throw PreludeError(path.string() + ":" + position_prefix(e.pos()) + ": " + e.what(), false);
  } catch (const SyntaxError& e) {
    throw PreludeError(path.string() + ":" + position_prefix(e.pos()) + ": " + e.what(), false);
  } catch (const RuntimeError& e) {
    throw PreludeError(path.string() + ": " + e.what(), false);
  }
}

void Session::report_error(const std::string& message, const std::string& context) {
  sink_.report(Diagnostic{Severity::Error, message, context});
  sink_.flush();
}

RunStatus Session::run(std::string_view source) {
  ast::NodePtr program;
  try {
    program = parse_source(source);
  } catch (const LexError& e) {
    report_error("lexical error at " + position_prefix(e.pos()) + ": " + e.what());
    return RunStatus::SyntaxError;
  } catch (const SyntaxError& e) {
    report_error("syntax error at " + position_prefix(e.pos()) + ": " + e.what());
    return RunStatus::SyntaxError;
  }
  return run_program(*program);
}

RunStatus Session::run_program(const ast::Node& program) {
  const auto* block = program.get_if<ast::Block>();
  std::vector<ast::NodePtr> single;
  const std::vector<ast::NodePtr>* statements = block ? &block->statements : nullptr;
  if (statements == nullptr) {
    single.push_back(std::make_shared<const ast::Node>(program));
    statements = &single;
  }
  for (const auto& stmt : *statements) {
    try {
      Value value = interp_.eval(*stmt, interp_.global());
      if (interp_.visible()) autoprint(value);
    } catch (const RuntimeError& e) {
      out_.flush();
      report_error(e.what(), e.context());
      return RunStatus::RuntimeError;
    } catch (const MethodTransfer&) {
      report_error("UseMethod result escaped its call frame");
      return RunStatus::RuntimeError;
    } catch (const std::exception& e) {
      report_error(std::string("internal error: ") + e.what());
      return RunStatus::RuntimeError;
    }
    out_.flush();
    sink_.flush();
  }
  return RunStatus::Ok;
}

Value Session::evaluate(std::string_view source) {
  ast::NodePtr program = parse_source(source);
  return interp_.eval_program(*program, interp_.global());
}

void Session::autoprint(const Value& v) {
  const Value* print = find_function(*interp_.global(), "print");
  if (print != nullptr && print->is<Closure>()) {
    interp_.apply(*print, {v}, {"x"}, "print", interp_.global());
  } else {
    print_value(out_, v);
  }
}

}  // namespace s3lite
