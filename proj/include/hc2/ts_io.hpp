#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hc2/dataset.hpp"

namespace hc2 {

/// Parse failure with the 1-based line number of the offending input line.
class TsParseError : public Hc2Error {
 public:
  TsParseError(int line, const std::string& message)
      : Hc2Error("line " + std::to_string(line) + ": " + message), line_(line) {}
  int line() const { return line_; }

 private:
  int line_;
};

struct TsHeader {
  std::string problem_name;
  bool is_univariate = true;
  Index n_dimensions = 1;
  bool is_equal_length = true;
  Index series_length = 0;
  std::vector<std::string> class_labels;
};

/// Reads a UCR/UEA `.ts` file. Header keys are case-insensitive; unknown keys
/// are reported through `warnings` (when given) and skipped. Rejects
/// unequal-length data, regression targets and non-finite values.
TimeSeriesDataset parse_ts(std::istream& in, std::vector<std::string>* warnings = nullptr);
TimeSeriesDataset parse_ts_file(const std::string& path,
                                std::vector<std::string>* warnings = nullptr);

/// Canonical `.ts` form: fixed header order, no comments, shortest
/// round-trip value rendering. parse_ts(write_ts(d)) is structurally
/// identical to d.
void write_ts(const TimeSeriesDataset& dataset, std::ostream& out);
std::string write_ts_string(const TimeSeriesDataset& dataset);
void write_ts_file(const TimeSeriesDataset& dataset, const std::string& path);

}  // namespace hc2
