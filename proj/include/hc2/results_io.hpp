#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "hc2/dataset.hpp"

namespace hc2 {

/// One evaluated case; the distribution is quantised to 6 decimal places
/// before being written or scored, so file and memory agree bit for bit.
struct Prediction {
  int true_label = -1;
  int predicted_label = -1;
  Vector distribution;
};

struct RunDescriptor {
  std::string dataset;
  std::string classifier;
  std::string split = "test";
  int resample = 0;
  std::string parameters;               // free text, line 2
  double train_estimate = -1.0;         // -1 when absent
};

/// Round-half-even quantisation to 6 decimal places, exactly as the results
/// writer renders probabilities.
double quantise6(double p);
void quantise6(Vector& distribution);

/// Line 1: dataset,classifier,split,resample
/// Line 2: free-text parameter record
/// Line 3: train estimate (or -1)
/// Then one line per case: true,pred,,p_0,p_1,...
void write_results(const std::vector<Prediction>& predictions, const RunDescriptor& meta,
                   std::ostream& out);
std::string write_results_string(const std::vector<Prediction>& predictions,
                                 const RunDescriptor& meta);

/// Atomic write (temp file + rename).
void write_results_file(const std::vector<Prediction>& predictions, const RunDescriptor& meta,
                        const std::string& path);

struct ResultsFile {
  RunDescriptor meta;
  std::vector<Prediction> predictions;
};

ResultsFile read_results(std::istream& in);
ResultsFile read_results_file(const std::string& path);

}  // namespace hc2
