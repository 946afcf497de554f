#pragma once

#include <filesystem>

#include "s3lite/interpreter.hpp"
#include "s3lite/value.hpp"

namespace s3lite {

/// Relative tolerance used by all.equal.
inline constexpr double kAllEqualTolerance = 1.5e-8;

/// Deep structural comparison. Numbers compare by mean relative difference
/// (scaled by the larger of the two mean magnitudes, so the test is
/// symmetric); everything else, including attributes, must match exactly.
bool all_equal(const Value& a, const Value& b, double tolerance = kAllEqualTolerance);

/// Binds the native builtins into the interpreter's global environment.
/// `asset_dir` backs `asset_path()`.
void install_builtins(Interpreter& interp, const std::filesystem::path& asset_dir);

}  // namespace s3lite
