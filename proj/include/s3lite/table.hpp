#pragma once

#include <filesystem>
#include <string_view>

#include "s3lite/value.hpp"

namespace s3lite {

/// Parses tab-separated text with a header line into a data frame: a record
/// of equal-length columns with class "data_frame" and a "row_count"
/// attribute. A column whose every entry is a finite number becomes
/// numeric; otherwise it stays character. `NA` entries are rejected.
/// `origin` names the source in error messages.
Value parse_table(std::string_view text, std::string_view origin = "<table>");

/// Reads and parses a TSV file. Throws RuntimeError naming the path when
/// the file cannot be read.
Value load_table(const std::filesystem::path& path);

/// Checks the data-frame invariants; throws RuntimeError when violated.
void validate_data_frame(const Value& v);

}  // namespace s3lite
