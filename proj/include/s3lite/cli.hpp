#pragma once

#include <istream>
#include <ostream>

#include "s3lite/session.hpp"

namespace s3lite::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kRuntimeError = 1,
  kSyntaxError = 2,  // also used for command-line usage errors
  kIoError = 3,
};

struct Terminal {
  bool stdin_is_tty = false;
  bool stderr_is_tty = false;
};

/// Reads statements from `in` until EOF. Incomplete input continues on the
/// next line under a "+ " prompt; errors are reported and the loop goes on.
int run_repl(Session& session, std::istream& in, std::ostream& prompt_out, DiagnosticSink& sink);

/// Entry point behind the `s3lite` executable:
///
///   s3lite [--no-prelude] [--color never|auto] FILE
///   s3lite [--no-prelude] [--color never|auto] -e EXPR
///   s3lite [--no-prelude] [--color never|auto]            (REPL)
///
/// S3L_PRELUDE, when set, overrides the prelude path.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err, Terminal terminal = {});

}  // namespace s3lite::cli
