#include "hc2/ts_io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <optional>
#include <sstream>

namespace hc2 {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return s;
}

std::string strip(const std::string& s) {
  std::size_t b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  std::size_t e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream iss(s);
  std::string tok;
  while (iss >> tok) out.push_back(tok);
  return out;
}

bool parse_bool(const std::string& s, int line) {
  std::string v = lower(s);
  if (v == "true") return true;
  if (v == "false") return false;
  throw TsParseError(line, "expected true/false, got '" + s + "'");
}

long parse_int(const std::string& s, int line) {
  long value = 0;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc() || p != s.data() + s.size())
    throw TsParseError(line, "expected an integer, got '" + s + "'");
  return value;
}

double parse_value(const std::string& s, int line) {
  std::string t = strip(s);
  if (t.empty()) throw TsParseError(line, "empty value field");
  double value = 0.0;
  auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), value);
  if (ec != std::errc() || p != t.data() + t.size())
    throw TsParseError(line, "malformed value '" + t + "'");
  if (!std::isfinite(value)) throw TsParseError(line, "non-finite value '" + t + "'");
  return value;
}

std::vector<std::string> split_on(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    std::size_t at = s.find(sep, start);
    if (at == std::string::npos) {
      out.push_back(s.substr(start));
      return out;
    }
    out.push_back(s.substr(start, at - start));
    start = at + 1;
  }
}

std::string render_value(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  (void)ec;
  return std::string(buf, p);
}

}  // namespace

TimeSeriesDataset parse_ts(std::istream& in, std::vector<std::string>* warnings) {
  TsHeader header;
  bool saw_problem_name = false, saw_dimensionality = false, saw_equal_length = false;
  bool saw_series_length = false, saw_class_label = false, in_data = false;

  std::vector<Case> cases;
  std::string line;
  int line_no = 0;

  auto warn = [&](const std::string& msg) {
    if (warnings) warnings->push_back(msg);
  };

  while (std::getline(in, line)) {
    ++line_no;
    std::string text = strip(line);
    if (text.empty() || text[0] == '#') continue;

    if (!in_data) {
      if (text[0] != '@') throw TsParseError(line_no, "expected a header tag before @data");
      std::size_t sp = text.find_first_of(" \t");
      std::string key = lower(text.substr(0, sp == std::string::npos ? text.size() : sp));
      std::string rest = sp == std::string::npos ? "" : strip(text.substr(sp));

      if (key == "@data") {
        if (!rest.empty()) throw TsParseError(line_no, "@data takes no argument");
        if (!saw_class_label) throw TsParseError(line_no, "@classLabel must precede @data");
        in_data = true;
      } else if (key == "@problemname") {
        if (rest.empty()) throw TsParseError(line_no, "@problemName needs a value");
        header.problem_name = rest;
        saw_problem_name = true;
      } else if (key == "@univariate") {
        header.is_univariate = parse_bool(rest, line_no);
        if (header.is_univariate) header.n_dimensions = 1;
        saw_dimensionality = true;
      } else if (key == "@dimensions") {
        long d = parse_int(rest, line_no);
        if (d < 1) throw TsParseError(line_no, "@dimensions must be >= 1");
        header.n_dimensions = d;
        header.is_univariate = (d == 1);
        saw_dimensionality = true;
      } else if (key == "@equallength") {
        header.is_equal_length = parse_bool(rest, line_no);
        if (!header.is_equal_length)
          throw TsParseError(line_no, "unequal-length series are not supported");
        saw_equal_length = true;
      } else if (key == "@serieslength") {
        long m = parse_int(rest, line_no);
        if (m < 3) throw TsParseError(line_no, "@seriesLength must be >= 3");
        header.series_length = m;
        saw_series_length = true;
      } else if (key == "@classlabel") {
        auto toks = split_ws(rest);
        if (toks.empty()) throw TsParseError(line_no, "@classLabel needs true/false");
        if (!parse_bool(toks[0], line_no))
          throw TsParseError(line_no, "@classLabel false: dataset has no class labels");
        if (toks.size() < 3) throw TsParseError(line_no, "@classLabel needs >= 2 labels");
        header.class_labels.assign(toks.begin() + 1, toks.end());
        for (std::size_t i = 0; i < header.class_labels.size(); ++i)
          for (std::size_t j = i + 1; j < header.class_labels.size(); ++j)
            if (header.class_labels[i] == header.class_labels[j])
              throw TsParseError(line_no, "duplicate class label '" + header.class_labels[i] + "'");
        saw_class_label = true;
      } else if (key == "@targetlabel") {
        throw TsParseError(line_no, "@targetLabel (regression) data is not supported");
      } else if (key == "@timestamps") {
        if (parse_bool(rest, line_no))
          throw TsParseError(line_no, "timestamped series are not supported");
      } else if (key == "@missing") {
        if (parse_bool(rest, line_no))
          throw TsParseError(line_no, "missing values are not supported");
      } else {
        warn("line " + std::to_string(line_no) + ": unknown header key '" + key + "' skipped");
      }
      continue;
    }

    // data line: dim1:dim2:...:label
    auto fields = split_on(text, ':');
    if (fields.size() < 2) throw TsParseError(line_no, "case line has no class label field");
    auto n_dims = static_cast<Index>(fields.size()) - 1;
    if (saw_dimensionality && n_dims != header.n_dimensions)
      throw TsParseError(line_no, "case has " + std::to_string(n_dims) + " dimensions, header says " +
                                      std::to_string(header.n_dimensions));
    if (!saw_dimensionality) {
      header.n_dimensions = n_dims;
      header.is_univariate = (n_dims == 1);
      saw_dimensionality = true;
    }

    std::string label = strip(fields.back());
    if (label.empty()) throw TsParseError(line_no, "empty class label");
    int label_idx = -1;
    for (std::size_t i = 0; i < header.class_labels.size(); ++i)
      if (header.class_labels[i] == label) label_idx = static_cast<int>(i);
    if (label_idx < 0) throw TsParseError(line_no, "unknown class label '" + label + "'");

    std::optional<Index> m;
    std::vector<std::vector<double>> dims;
    dims.reserve(static_cast<std::size_t>(n_dims));
    for (Index dim = 0; dim < n_dims; ++dim) {
      auto values = split_on(fields[static_cast<std::size_t>(dim)], ',');
      std::vector<double> parsed;
      parsed.reserve(values.size());
      for (const auto& v : values) parsed.push_back(parse_value(v, line_no));
      if (m && static_cast<Index>(parsed.size()) != *m)
        throw TsParseError(line_no, "dimensions of one case differ in length");
      m = static_cast<Index>(parsed.size());
      dims.push_back(std::move(parsed));
    }
    if (saw_series_length && *m != header.series_length)
      throw TsParseError(line_no, "case length " + std::to_string(*m) + " does not match @seriesLength " +
                                      std::to_string(header.series_length));
    if (!saw_series_length) {
      header.series_length = *m;
      saw_series_length = true;
    }
    if (!cases.empty() && static_cast<Index>(cases.front().values.cols()) != *m)
      throw TsParseError(line_no, "unequal series lengths in data section");

    Case c;
    c.values.resize(n_dims, *m);
    for (Index dim = 0; dim < n_dims; ++dim)
      for (Index t = 0; t < *m; ++t)
        c.values(dim, t) = dims[static_cast<std::size_t>(dim)][static_cast<std::size_t>(t)];
    c.label = label_idx;
    cases.push_back(std::move(c));
  }

  if (!in_data) throw TsParseError(line_no, "no @data section");
  if (cases.empty()) throw TsParseError(line_no, "no cases after @data");
  if (!saw_problem_name) header.problem_name = "unnamed";
  (void)saw_equal_length;

  return TimeSeriesDataset(header.problem_name, header.class_labels, std::move(cases));
}

TimeSeriesDataset parse_ts_file(const std::string& path, std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw Hc2Error("cannot open '" + path + "'");
  return parse_ts(in, warnings);
}

void write_ts(const TimeSeriesDataset& dataset, std::ostream& out) {
  out << "@problemName " << dataset.name() << "\n";
  out << "@univariate " << (dataset.n_dimensions() == 1 ? "true" : "false") << "\n";
  if (dataset.n_dimensions() > 1) out << "@dimensions " << dataset.n_dimensions() << "\n";
  out << "@equalLength true\n";
  out << "@seriesLength " << dataset.series_length() << "\n";
  out << "@classLabel true";
  for (const auto& l : dataset.class_labels()) out << ' ' << l;
  out << "\n@data\n";
  for (const auto& c : dataset.cases()) {
    for (Index dim = 0; dim < c.values.rows(); ++dim) {
      for (Index t = 0; t < c.values.cols(); ++t) {
        if (t) out << ',';
        out << render_value(c.values(dim, t));
      }
      out << ':';
    }
    out << dataset.class_labels()[static_cast<std::size_t>(c.label)] << "\n";
  }
}

std::string write_ts_string(const TimeSeriesDataset& dataset) {
  std::ostringstream oss;
  write_ts(dataset, oss);
  return oss.str();
}

void write_ts_file(const TimeSeriesDataset& dataset, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Hc2Error("cannot write '" + path + "'");
  write_ts(dataset, out);
}

}  // namespace hc2
