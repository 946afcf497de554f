#pragma once

#include <span>
#include <string>
#include <vector>

#include "s3lite/value.hpp"

namespace s3lite {

/// Sample quantile by linear interpolation between order statistics
/// (Hyndman & Fan type 7): with the values sorted ascending and
/// h = (n - 1) p, returns x[floor(h)] + (h - floor(h)) (x[floor(h) + 1] - x[floor(h)]).
/// Throws RuntimeError on an empty input or p outside [0, 1].
double quantile_type7(std::span<const double> values, double p);

struct NumericSummary {
  double min;
  double first_quartile;
  double median;
  double mean;
  double third_quartile;
  double max;
};

NumericSummary summarize_numeric(std::span<const double> values);

/// One column of a data-frame summary, as display cells such as
/// "Min.   :4.300  " or "setosa    :50  ".
struct SummaryColumn {
  std::string name;
  std::vector<std::string> cells;
};

/// Numeric columns get Min./1st Qu./Median/Mean/3rd Qu./Max. at 4
/// significant digits; string columns get per-value counts sorted by value.
/// Throws RuntimeError for an empty or malformed data frame.
std::vector<SummaryColumn> summarize_data_frame(const Value& data_frame);

/// Packs summary columns into a record of class "table" (column name ->
/// cells), and back.
Value summary_table_value(const std::vector<SummaryColumn>& columns);
std::vector<SummaryColumn> summary_table_columns(const Value& table);

/// Lays the table out like a character matrix: centred-ish headers,
/// left-aligned cells, blank rows for short columns, wrapped to `width`.
std::string render_summary_table(const std::vector<SummaryColumn>& columns,
                                 std::size_t width = 80);

/// Record of class "summaryDefault" with fields Min., 1st Qu., Median,
/// Mean, 3rd Qu., Max.
Value summary_default_value(std::span<const double> values);
std::string render_summary_default(const Value& summary);

}  // namespace s3lite
