#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace s3lite {

enum class Severity { Warning, Error };

struct Diagnostic {
  Severity severity;
  std::string message;
  std::string context;  // "rss.default(lm.fit)"; empty at top level

  /// "Warning in f(x): msg" / "Error: msg".
  std::string render() const;
};

class DiagnosticSink {
 public:
  virtual ~DiagnosticSink() = default;
  virtual void report(const Diagnostic& diagnostic) = 0;
  virtual void flush() {}
};

/// Writes rendered diagnostics to a stream, one per line, optionally in
/// ANSI color.
class StreamSink : public DiagnosticSink {
 public:
  explicit StreamSink(std::ostream& out, bool color = false) : out_(out), color_(color) {}

  void report(const Diagnostic& diagnostic) override;
  void flush() override { out_.flush(); }

 private:
  std::ostream& out_;
  bool color_;
};

/// Keeps diagnostics in memory; used by tests.
class CollectingSink : public DiagnosticSink {
 public:
  void report(const Diagnostic& diagnostic) override { diagnostics_.push_back(diagnostic); }

  const std::vector<Diagnostic>& diagnostics() const { return diagnostics_; }
  std::vector<std::string> warnings() const;
  std::vector<std::string> errors() const;
  void clear() { diagnostics_.clear(); }

 private:
  std::vector<Diagnostic> diagnostics_;
};

}  // namespace s3lite
