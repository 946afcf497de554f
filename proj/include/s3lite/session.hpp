#pragma once

#include <filesystem>
#include <memory>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

#include "s3lite/ast.hpp"
#include "s3lite/diagnostics.hpp"
#include "s3lite/interpreter.hpp"

namespace s3lite {

/// Directory holding prelude.s3l and the bundled data files.
std::filesystem::path default_asset_dir();

struct SessionOptions {
  bool load_prelude = true;
  std::filesystem::path asset_dir = default_asset_dir();
  std::optional<std::filesystem::path> prelude_path;  // defaults to asset_dir/prelude.s3l
};

enum class RunStatus { Ok, RuntimeError, SyntaxError };

/// Raised when the prelude cannot be loaded. `io()` distinguishes an
/// unreadable file from a prelude that fails to parse or evaluate.
class PreludeError : public std::runtime_error {
 public:
  PreludeError(const std::string& message, bool io) : std::runtime_error(message), io_(io) {}
  bool io() const { return io_; }

 private:
  bool io_;
};

/// One interpreter with builtins and (optionally) the prelude loaded into
/// its global environment. Results go to `out`, diagnostics to `sink`.
class Session {
 public:
  Session(SessionOptions options, std::ostream& out, DiagnosticSink& sink);

  /// Parses and runs `source` statement by statement, auto-printing
  /// visible results. Stops at the first runtime error.
  RunStatus run(std::string_view source);
  RunStatus run_program(const ast::Node& program);

  /// Evaluates `source` and returns the last value without printing.
  /// Lex, syntax and runtime errors propagate as exceptions.
  Value evaluate(std::string_view source);

  /// Prints `v` through the `print` generic when one is bound.
  void autoprint(const Value& v);

  Interpreter& interpreter() { return interp_; }
  const std::shared_ptr<Environment>& global() const { return interp_.global(); }
  const SessionOptions& options() const { return options_; }

 private:
  void load_prelude();
  void report_error(const std::string& message, const std::string& context = {});

  SessionOptions options_;
  std::ostream& out_;
  DiagnosticSink& sink_;
  Interpreter interp_;
};

}  // namespace s3lite
