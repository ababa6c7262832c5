#include "hc2/results_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace hc2 {

namespace {

std::string fixed6(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", v);
  return buf;
}

}  // namespace

double quantise6(double p) {
  // snprintf rounds the binary value correctly (half-even on ties), so
  // parsing the rendered text back is exactly what a file reader sees.
  return std::strtod(fixed6(p).c_str(), nullptr);
}

void quantise6(Vector& distribution) {
  for (Index i = 0; i < distribution.size(); ++i) distribution[i] = quantise6(distribution[i]);
}

void write_results(const std::vector<Prediction>& predictions, const RunDescriptor& meta,
                   std::ostream& out) {
  out << meta.dataset << ',' << meta.classifier << ',' << meta.split << ',' << meta.resample
      << '\n';
  out << meta.parameters << '\n';
  if (meta.train_estimate < 0)
    out << "-1\n";
  else
    out << fixed6(meta.train_estimate) << '\n';
  for (const auto& p : predictions) {
    out << p.true_label << ',' << p.predicted_label << ',';
    for (Index i = 0; i < p.distribution.size(); ++i) out << ',' << fixed6(p.distribution[i]);
    out << '\n';
  }
}

std::string write_results_string(const std::vector<Prediction>& predictions,
                                 const RunDescriptor& meta) {
  std::ostringstream oss;
  write_results(predictions, meta, oss);
  return oss.str();
}

void write_results_file(const std::vector<Prediction>& predictions, const RunDescriptor& meta,
                        const std::string& path) {
  namespace fs = std::filesystem;
  fs::path target(path);
  if (target.has_parent_path()) fs::create_directories(target.parent_path());
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) throw Hc2Error("cannot write '" + tmp.string() + "'");
    write_results(predictions, meta, out);
  }
  fs::rename(tmp, target);
}

ResultsFile read_results(std::istream& in) {
  ResultsFile rf;
  std::string line;
  if (!std::getline(in, line)) throw Hc2Error("results file: missing header line");
  {
    std::istringstream iss(line);
    std::string field;
    std::vector<std::string> fields;
    while (std::getline(iss, field, ',')) fields.push_back(field);
    if (fields.size() < 4) throw Hc2Error("results file: malformed header line");
    rf.meta.dataset = fields[0];
    rf.meta.classifier = fields[1];
    rf.meta.split = fields[2];
    rf.meta.resample = std::atoi(fields[3].c_str());
  }
  if (!std::getline(in, rf.meta.parameters)) throw Hc2Error("results file: missing parameter line");
  if (!std::getline(in, line)) throw Hc2Error("results file: missing train estimate line");
  rf.meta.train_estimate = std::strtod(line.c_str(), nullptr);

  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::istringstream iss(line);
    std::string field;
    while (std::getline(iss, field, ',')) fields.push_back(field);
    if (fields.size() < 4 || !fields[2].empty())
      throw Hc2Error("results file: malformed prediction line");
    Prediction p;
    p.true_label = std::atoi(fields[0].c_str());
    p.predicted_label = std::atoi(fields[1].c_str());
    p.distribution.resize(static_cast<Index>(fields.size()) - 3);
    for (std::size_t i = 3; i < fields.size(); ++i)
      p.distribution[static_cast<Index>(i - 3)] = std::strtod(fields[i].c_str(), nullptr);
    rf.predictions.push_back(std::move(p));
  }
  return rf;
}

ResultsFile read_results_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Hc2Error("cannot open '" + path + "'");
  return read_results(in);
}

}  // namespace hc2
