#include "s3lite/stats.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

#include "s3lite/errors.hpp"
#include "s3lite/format.hpp"

namespace s3lite {

namespace {

constexpr int kSummaryDigits = 4;

const std::vector<std::string>& summary_labels() {
  static const std::vector<std::string> labels = {"Min.",    "1st Qu.", "Median",
                                                  "Mean",    "3rd Qu.", "Max."};
  return labels;
}

std::vector<double> stats_in_order(const NumericSummary& s) {
  return {s.min, s.first_quartile, s.median, s.mean, s.third_quartile, s.max};
}

std::vector<std::string> numeric_cells(std::span<const double> values) {
  std::vector<double> stats = stats_in_order(summarize_numeric(values));
  std::vector<std::string> formatted = format_numbers(stats, kSummaryDigits);
  std::size_t width = 0;
  for (const auto& f : formatted) width = std::max(width, f.size());
  std::size_t label_width = 0;
  for (const auto& l : summary_labels()) label_width = std::max(label_width, l.size());

  std::vector<std::string> cells;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    cells.push_back(pad_right(summary_labels()[i], label_width) + ":" +
                    pad_left(formatted[i], width) + "  ");
  }
  return cells;
}

std::vector<std::string> count_cells(const std::vector<std::string>& values) {
  std::map<std::string, std::size_t> counts;
  for (const auto& v : values) ++counts[v];
  std::size_t name_width = 0;
  std::size_t count_width = 0;
  for (const auto& [name, count] : counts) {
    name_width = std::max(name_width, name.size());
    count_width = std::max(count_width, std::to_string(count).size());
  }
  std::vector<std::string> cells;
  for (const auto& [name, count] : counts) {
    cells.push_back(pad_right(name, name_width) + ":" +
                    pad_left(std::to_string(count), count_width) + "  ");
  }
  return cells;
}

std::string column_header(const SummaryColumn& column) {
  std::size_t label_width = 0;
  if (!column.cells.empty()) {
    auto colon = column.cells.front().find(':');
    if (colon != std::string::npos) label_width = colon;
  }
  double pad = std::floor(static_cast<double>(label_width) -
                          static_cast<double>(column.name.size()) / 2.0);
  return std::string(pad > 0 ? static_cast<std::size_t>(pad) : 0, ' ') + column.name;
}

}  // namespace

double quantile_type7(std::span<const double> values, double p) {
  if (values.empty()) throw RuntimeError("quantile of an empty vector");
  if (!(p >= 0.0 && p <= 1.0)) throw RuntimeError("probability must be in [0, 1]");
  std::vector<double> sorted(values.begin(), values.end());
  std::sort(sorted.begin(), sorted.end());
  double h = static_cast<double>(sorted.size() - 1) * p;
  double lo = std::floor(h);
  auto j = static_cast<std::size_t>(lo);
  double frac = h - lo;
  if (frac == 0.0 || j + 1 >= sorted.size()) return sorted[j];
  return sorted[j] + frac * (sorted[j + 1] - sorted[j]);
}

NumericSummary summarize_numeric(std::span<const double> values) {
  if (values.empty()) throw RuntimeError("summary of an empty vector");
  double total = std::accumulate(values.begin(), values.end(), 0.0);
  return NumericSummary{
      quantile_type7(values, 0.0),  quantile_type7(values, 0.25),
      quantile_type7(values, 0.5),  total / static_cast<double>(values.size()),
      quantile_type7(values, 0.75), quantile_type7(values, 1.0),
  };
}

std::vector<SummaryColumn> summarize_data_frame(const Value& data_frame) {
  const auto* rec = data_frame.get_if<Record>();
  if (rec == nullptr) throw RuntimeError("summary of a data frame needs a record of columns");
  if (rec->fields.empty()) throw RuntimeError("empty data frame");

  std::vector<SummaryColumn> columns;
  std::size_t rows = length_of(rec->fields.value_at(0));
  for (std::size_t i = 0; i < rec->fields.size(); ++i) {
    const Value& column = rec->fields.value_at(i);
    const std::string& name = rec->fields.name_at(i);
    if (length_of(column) != rows) {
      throw RuntimeError("data frame column '" + name + "' has " +
                         std::to_string(length_of(column)) + " rows, expected " +
                         std::to_string(rows));
    }
    if (rows == 0) throw RuntimeError("empty data frame");
    if (const auto* num = column.get_if<NumericVector>()) {
      columns.push_back({name, numeric_cells(num->items)});
    } else if (const auto* str = column.get_if<StringVector>()) {
      columns.push_back({name, count_cells(str->items)});
    } else {
      throw RuntimeError("data frame column '" + name + "' must be numeric or character");
    }
  }
  return columns;
}

Value summary_table_value(const std::vector<SummaryColumn>& columns) {
  Value table = Value::record();
  auto& fields = table.as<Record>().fields;
  for (const auto& column : columns) fields.set(column.name, Value::strings(column.cells));
  return set_class(std::move(table), ClassVector{"table"});
}

std::vector<SummaryColumn> summary_table_columns(const Value& table) {
  const auto* rec = table.get_if<Record>();
  if (rec == nullptr) throw RuntimeError("not a summary table");
  std::vector<SummaryColumn> columns;
  for (std::size_t i = 0; i < rec->fields.size(); ++i) {
    const auto* cells = rec->fields.value_at(i).get_if<StringVector>();
    if (cells == nullptr) throw RuntimeError("summary table columns must be character vectors");
    columns.push_back({rec->fields.name_at(i), cells->items});
  }
  return columns;
}

std::string render_summary_table(const std::vector<SummaryColumn>& columns, std::size_t width) {
  std::size_t rows = 0;
  std::vector<std::string> headers;
  std::vector<std::size_t> widths;
  for (const auto& column : columns) {
    rows = std::max(rows, column.cells.size());
    headers.push_back(column_header(column));
    std::size_t w = headers.back().size();
    for (const auto& cell : column.cells) w = std::max(w, cell.size());
    widths.push_back(w);
  }

  std::string out;
  std::size_t start = 0;
  while (start < columns.size()) {
    std::size_t end = start;
    std::size_t used = 0;
    while (end < columns.size() && (end == start || used + widths[end] + 1 < width)) {
      used += widths[end] + 1;
      ++end;
    }
    for (std::size_t c = start; c < end; ++c) out += " " + pad_right(headers[c], widths[c]);
    out += '\n';
    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = start; c < end; ++c) {
        const auto& cells = columns[c].cells;
        out += " " + pad_right(r < cells.size() ? cells[r] : std::string(), widths[c]);
      }
      out += '\n';
    }
    start = end;
  }
  return out;
}

Value summary_default_value(std::span<const double> values) {
  std::vector<double> stats = stats_in_order(summarize_numeric(values));
  Value out = Value::record();
  auto& fields = out.as<Record>().fields;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    fields.set(summary_labels()[i], Value::number(stats[i]));
  }
  return set_class(std::move(out), ClassVector{"summaryDefault"});
}

std::string render_summary_default(const Value& summary) {
  const auto* rec = summary.get_if<Record>();
  if (rec == nullptr) throw RuntimeError("not a summary");
  std::vector<double> stats;
  for (std::size_t i = 0; i < rec->fields.size(); ++i) {
    const auto* n = rec->fields.value_at(i).get_if<NumericVector>();
    if (n == nullptr || n->items.size() != 1) throw RuntimeError("malformed summary");
    stats.push_back(n->items[0]);
  }
  std::vector<std::string> formatted = format_numbers(stats, kSummaryDigits);
  std::size_t w = 0;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    w = std::max({w, rec->fields.name_at(i).size(), formatted[i].size()});
  }
  std::string names_line;
  std::string values_line;
  for (std::size_t i = 0; i < stats.size(); ++i) {
    names_line += pad_left(rec->fields.name_at(i), w) + " ";
    values_line += pad_left(formatted[i], w) + " ";
  }
  return names_line + "\n" + values_line + "\n";
}

}  // namespace s3lite
