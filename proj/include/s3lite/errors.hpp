#pragma once

#include <stdexcept>
#include <string>

namespace s3lite {

/// 1-based line/column into the source text.
struct SourcePos {
  int line = 1;
  int col = 1;

  friend bool operator==(const SourcePos&, const SourcePos&) = default;
};

class LexError : public std::runtime_error {
 public:
  LexError(const std::string& message, SourcePos pos)
      : std::runtime_error(message), pos_(pos) {}

  SourcePos pos() const { return pos_; }

 private:
  SourcePos pos_;
};

class SyntaxError : public std::runtime_error {
 public:
  SyntaxError(const std::string& message, SourcePos pos, bool incomplete)
      : std::runtime_error(message), pos_(pos), incomplete_(incomplete) {}

  SourcePos pos() const { return pos_; }

  // True when the error was raised at end of input, i.e. more text could
  // complete the statement. The REPL uses this for continuation lines.
  bool incomplete() const { return incomplete_; }

 private:
  SourcePos pos_;
  bool incomplete_;
};

/// An evaluation error. `context` is filled in by the innermost closure
/// frame the error unwinds through, e.g. "f(x)".
class RuntimeError : public std::runtime_error {
 public:
  explicit RuntimeError(const std::string& message) : std::runtime_error(message) {}

  const std::string& context() const { return context_; }
  bool has_context() const { return has_context_; }
  void set_context(std::string context) {
    context_ = std::move(context);
    has_context_ = true;
  }

 private:
  std::string context_;
  bool has_context_ = false;
};

}  // namespace s3lite
