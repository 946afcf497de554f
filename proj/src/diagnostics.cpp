#include "s3lite/diagnostics.hpp"

namespace s3lite {

std::string Diagnostic::render() const {
  std::string out = severity == Severity::Warning ? "Warning" : "Error";
  if (!context.empty()) out += " in " + context;
  return out + ": " + message;
}

void StreamSink::report(const Diagnostic& diagnostic) {
  if (color_) {
    out_ << (diagnostic.severity == Severity::Warning ? "\x1b[33m" : "\x1b[31m")
         << diagnostic.render() << "\x1b[0m\n";
  } else {
    out_ << diagnostic.render() << '\n';
  }
}

std::vector<std::string> CollectingSink::warnings() const {
  std::vector<std::string> out;
  for (const auto& d : diagnostics_) {
    if (d.severity == Severity::Warning) out.push_back(d.render());
  }
  return out;
}

std::vector<std::string> CollectingSink::errors() const {
  std::vector<std::string> out;
  for (const auto& d : diagnostics_) {
    if (d.severity == Severity::Error) out.push_back(d.render());
  }
  return out;
}

}  // namespace s3lite
