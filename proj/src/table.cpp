#include "s3lite/table.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "s3lite/errors.hpp"

namespace s3lite {

namespace {

std::vector<std::string> split_tabs(std::string_view line) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    out.emplace_back(line.substr(start, tab == std::string_view::npos ? tab : tab - start));
    if (tab == std::string_view::npos) break;
    start = tab + 1;
  }
  return out;
}

bool parse_finite(const std::string& text, double& value) {
  if (text.empty()) return false;
  const char* begin = text.data();
  if (*begin == '+') ++begin;
  auto [ptr, ec] = std::from_chars(begin, text.data() + text.size(), value);
  return ec == std::errc() && ptr == text.data() + text.size() && std::isfinite(value);
}

}  // namespace

Value parse_table(std::string_view text, std::string_view origin) {
  std::vector<std::string> lines;
  std::istringstream in{std::string(text)};
  for (std::string line; std::getline(in, line);) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(std::move(line));
  }
  while (!lines.empty() && lines.back().empty()) lines.pop_back();

  std::string where(origin);
  if (lines.empty()) throw RuntimeError(where + ": empty file");
  std::vector<std::string> header = split_tabs(lines.front());
  std::set<std::string> unique;
  for (const auto& name : header) {
    if (name.empty()) throw RuntimeError(where + ": empty column name in header");
    if (!unique.insert(name).second) {
      throw RuntimeError(where + ": duplicate column name '" + name + "'");
    }
  }
  if (lines.size() == 1) throw RuntimeError(where + ": no data rows");

  std::vector<std::vector<std::string>> columns(header.size());
  for (std::size_t i = 1; i < lines.size(); ++i) {
    std::vector<std::string> fields = split_tabs(lines[i]);
    std::string line_no = std::to_string(i + 1);
    if (fields.size() != header.size()) {
      throw RuntimeError(where + ": line " + line_no + " has " + std::to_string(fields.size()) +
                         " fields, expected " + std::to_string(header.size()));
    }
    for (std::size_t c = 0; c < fields.size(); ++c) {
      if (fields[c] == "NA") {
        throw RuntimeError(where + ": line " + line_no + ": missing value (NA) in column '" +
                           header[c] + "' is not supported");
      }
      columns[c].push_back(std::move(fields[c]));
    }
  }

  Value frame = Value::record();
  auto& record = frame.as<Record>().fields;
  for (std::size_t c = 0; c < header.size(); ++c) {
    std::vector<double> numbers;
    bool numeric = true;
    for (const auto& cell : columns[c]) {
      double v = 0;
      if (!parse_finite(cell, v)) {
        numeric = false;
        break;
      }
      numbers.push_back(v);
    }
    record.set(header[c], numeric ? Value::numbers(std::move(numbers))
                                  : Value::strings(std::move(columns[c])));
  }
  frame = set_class(std::move(frame), ClassVector{"data_frame"});
  frame.attributes.set("row_count", Value::number(static_cast<double>(lines.size() - 1)));
  return frame;
}

Value load_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw RuntimeError("cannot open file '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_table(buffer.str(), path.string());
}

void validate_data_frame(const Value& v) {
  const auto* rec = v.get_if<Record>();
  if (rec == nullptr) throw RuntimeError("data frame must be a record");
  const Value* rows = v.attributes.find("row_count");
  const auto* n = rows ? rows->get_if<NumericVector>() : nullptr;
  if (n == nullptr || n->items.size() != 1) throw RuntimeError("data frame lacks row_count");
  for (std::size_t i = 0; i < rec->fields.size(); ++i) {
    const Value& col = rec->fields.value_at(i);
    if (!col.is<NumericVector>() && !col.is<StringVector>()) {
      throw RuntimeError("column '" + rec->fields.name_at(i) + "' must be numeric or character");
    }
    if (static_cast<double>(length_of(col)) != n->items[0]) {
      throw RuntimeError("column '" + rec->fields.name_at(i) + "' length differs from row_count");
    }
  }
}

}  // namespace s3lite
