#include "s3lite/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "s3lite/errors.hpp"
#include "s3lite/parser.hpp"

namespace s3lite::cli {

namespace {

constexpr const char* kPrompt = "s3l> ";
constexpr const char* kContinuation = "+ ";

int exit_code_for(RunStatus status) {
  switch (status) {
    case RunStatus::Ok: return kOk;
    case RunStatus::RuntimeError: return kRuntimeError;
    case RunStatus::SyntaxError: return kSyntaxError;
  }
  return kRuntimeError;
}

bool is_blank(const std::string& text) {
  return text.find_first_not_of(" \t\r\n") == std::string::npos;
}

void report(DiagnosticSink& sink, const std::string& message) {
  sink.report(Diagnostic{Severity::Error, message, {}});
  sink.flush();
}

std::string position(SourcePos pos) {
  return std::to_string(pos.line) + ":" + std::to_string(pos.col);
}

}  // namespace

int run_repl(Session& session, std::istream& in, std::ostream& prompt_out, DiagnosticSink& sink) {
  std::string buffer;
  std::string line;
  while (true) {
    prompt_out << (buffer.empty() ? kPrompt : kContinuation) << std::flush;
    if (!std::getline(in, line)) break;
    buffer += line;
    buffer += '\n';
    if (is_blank(buffer)) {
      buffer.clear();
      continue;
    }
    ast::NodePtr program;
    try {
      program = parse_source(buffer);
    } catch (const SyntaxError& e) {
      if (e.incomplete()) continue;
      report(sink, "syntax error at " + position(e.pos()) + ": " + e.what());
      buffer.clear();
      continue;
    } catch (const LexError& e) {
      report(sink, "lexical error at " + position(e.pos()) + ": " + e.what());
      buffer.clear();
      continue;
    }
    buffer.clear();
    session.run_program(*program);
  }
  if (!buffer.empty()) report(sink, "syntax error: unexpected end of input");
  prompt_out << '\n' << std::flush;
  return kOk;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err, Terminal terminal) {
  CLI::App app{"s3lite: an interpreter with S3-style generic function dispatch", "s3lite"};
  std::string file;
  std::string expr;
  bool no_prelude = false;
  std::string color = "auto";
  auto* file_opt = app.add_option("file", file, "Script to run (.s3l)");
  auto* expr_opt = app.add_option("-e", expr, "Evaluate EXPR as a one-statement script");
  expr_opt->excludes(file_opt);
  app.add_flag("--no-prelude", no_prelude, "Start without loading the prelude");
  app.add_option("--color", color, "Color diagnostics")
      ->check(CLI::IsMember({"never", "auto"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kSyntaxError;
  }

  StreamSink sink(err, color == "auto" && terminal.stderr_is_tty);
  SessionOptions options;
  options.load_prelude = !no_prelude;
  if (const char* prelude = std::getenv("S3L_PRELUDE"); prelude != nullptr && *prelude != '\0') {
    options.prelude_path = prelude;
  }

  std::optional<std::string> source;
  if (*expr_opt) {
    source = expr;
  } else if (*file_opt) {
    std::ifstream input(file, std::ios::binary);
    if (!input) {
      report(sink, "cannot open file '" + file + "'");
      return kIoError;
    }
    std::ostringstream text;
    text << input.rdbuf();
    if (input.bad()) {
      report(sink, "error reading file '" + file + "'");
      return kIoError;
    }
    source = text.str();
  }

  std::optional<Session> session;
  try {
    session.emplace(options, out, sink);
  } catch (const PreludeError& e) {
    report(sink, e.what());
    return e.io() ? kIoError : kRuntimeError;
  }

  if (source) {
    int code = exit_code_for(session->run(*source));
    out.flush();
    return code;
  }
  return run_repl(*session, in, terminal.stdin_is_tty ? out : err, sink);
}

}  // namespace s3lite::cli
