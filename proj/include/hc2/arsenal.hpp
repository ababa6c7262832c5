#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "hc2/budget.hpp"
#include "hc2/dataset.hpp"
#include "hc2/ridge.hpp"
#include "hc2/rng.hpp"

namespace hc2::arsenal {

/// Random dilated convolution kernel. Multivariate kernels carry one weight
/// row per selected dimension; every row is mean-centred.
struct Kernel {
  int length = 7;              // {7, 9, 11}
  std::vector<int> dimensions; // non-empty subset of 0..d-1
  Matrix weights;              // |dimensions| x length, rows sum to 0
  double bias = 0.0;           // U(-1, 1)
  int dilation = 1;
  int padding = 0;             // 0 or ((length-1)*dilation)/2

  Index output_positions(Index m) const {
    return m + 2 * padding - static_cast<Index>(length - 1) * dilation;
  }
};

Kernel sample_kernel(Index m, Index d, RandomStream& stream);

/// (max, proportion of positive values) over all output positions; values
/// outside the series count as zero when padded.
std::pair<double, double> apply_kernel(const Kernel& k, const Matrix& case_values);

/// 2k features per case: (max, ppv) pairs in kernel order.
Vector rocket_transform_row(const std::vector<Kernel>& kernels, const Matrix& case_values);

struct RocketMember {
  std::vector<Kernel> kernels;
  RidgeClassifier ridge;
  std::vector<int> bag_indices;  // bagging mode only

  int predict(const Matrix& case_values) const;
  void save(ByteWriter& w) const;
  static RocketMember load(ByteReader& r);
};

struct ArsenalConfig {
  int n_members = 25;            // r
  int kernels_per_member = 2000; // k
  std::optional<Millis> contract;
  int threads = 1;
  bool bagging = false;

  /// Table-3 single-transform preset: one member, 10,000 kernels.
  static ArsenalConfig rocket_preset() { return ArsenalConfig{1, 10000, std::nullopt, 1, false}; }
};

class Arsenal {
 public:
  std::vector<RocketMember> members;
  Index n_classes = 0;

  /// Majority vote: fraction of members predicting each class.
  ClassDistribution predict(const Matrix& case_values) const;

  void save(ByteWriter& w) const;
  static Arsenal load(ByteReader& r);
};

Arsenal build_arsenal(const TimeSeriesDataset& train, const ArsenalConfig& config,
                      const RandomStream& stream, BuildMonitor* monitor = nullptr,
                      const std::vector<std::uint8_t>* resume_state = nullptr);

}  // namespace hc2::arsenal
