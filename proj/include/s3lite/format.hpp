#pragma once

#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "s3lite/value.hpp"

namespace s3lite {

/// Formats numbers the way R's print does: each value is rounded to
/// `digits` significant digits, then the whole vector shares one notation
/// and one number of decimals (the fewest that show every value exactly at
/// that precision). Fixed notation is used unless scientific is narrower.
/// Results are not padded.
std::vector<std::string> format_numbers(std::span<const double> values, int digits = 7);

std::string format_number(double value, int digits = 7);

std::string pad_left(const std::string& text, std::size_t width);
std::string pad_right(const std::string& text, std::size_t width);

/// Element-wise conversion to strings (numbers at 15 significant digits).
/// Throws RuntimeError for records and functions.
std::vector<std::string> as_character(const Value& v);

/// Default printed representation, terminated by a newline:
/// `[1] 10.17245`, `[1] "myclass"`, `$field` blocks for records,
/// `attr(,"name")` blocks for attributes.
void print_value(std::ostream& out, const Value& v);
std::string format_value(const Value& v);

}  // namespace s3lite
