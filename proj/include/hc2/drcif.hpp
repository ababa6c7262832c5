#pragma once

#include <array>
#include <optional>
#include <vector>

#include "hc2/budget.hpp"
#include "hc2/dataset.hpp"
#include "hc2/rng.hpp"
#include "hc2/serialize.hpp"
#include "hc2/tree.hpp"

namespace hc2::drcif {

/// Representation ids: 0 = base series, 1 = first-order differences,
/// 2 = periodogram.
constexpr int kRepresentations = 3;

struct DrcifConfig {
  int n_trees = 500;             // r
  int attributes_per_tree = 10;  // a, of the 29-feature pool
  std::optional<Millis> contract;
  int threads = 1;
  bool bagging = false;  // train each tree on a bootstrap (estimate replica)
};

struct Interval {
  int representation = 0;
  int dimension = 0;
  int start = 0;   // 0-based
  int length = 0;  // >= 3
};

/// Per-case representation stack; rep[y] is d x rm_y.
using Representations = std::array<Matrix, kRepresentations>;
Representations compute_representations(const Matrix& case_values);

std::array<Index, kRepresentations> representation_lengths(Index m);

/// k_y = 4 + floor(sqrt(d) * sqrt(rm_y) / 3)
int intervals_per_representation(Index rep_length, Index d);

struct TreeInputs {
  std::vector<Interval> intervals;  // representation-major
  std::vector<int> feature_ids;     // a distinct ids of the 29
};

/// Uniform lengths in [3, rm_y/2], then a valid uniform start, uniform
/// dimension; a feature ids without replacement. Requires every rm_y >= 6.
TreeInputs sample_tree_inputs(Index m, Index d, int attributes, RandomStream& stream);

/// Row per case; columns ordered representation-major, then interval, then
/// feature. Slices are z-normalised for the canonical features only; any
/// non-finite value becomes 0.
Matrix build_feature_matrix(const std::vector<Representations>& cases,
                            const TreeInputs& inputs);
Vector feature_row(const Representations& reps, const TreeInputs& inputs);

struct DrcifTree {
  TreeInputs inputs;
  InfoGainTree tree;
  std::vector<int> bag_indices;  // bagging mode only

  void save(ByteWriter& w) const;
  static DrcifTree load(ByteReader& r);
};

class DrcifForest {
 public:
  std::vector<DrcifTree> trees;
  Index n_classes = 0;
  Index series_length = 0;
  Index n_dimensions = 0;

  /// Fraction of trees voting each class.
  ClassDistribution predict(const Matrix& case_values) const;
  int tree_vote(const DrcifTree& t, const Representations& reps) const;

  void save(ByteWriter& w) const;
  static DrcifForest load(ByteReader& r);
};

DrcifForest build_drcif(const TimeSeriesDataset& train, const DrcifConfig& config,
                        const RandomStream& stream, BuildMonitor* monitor = nullptr,
                        const std::vector<std::uint8_t>* resume_state = nullptr);

}  // namespace hc2::drcif
