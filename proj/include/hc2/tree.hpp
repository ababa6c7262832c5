#pragma once

#include <vector>

#include "hc2/dataset.hpp"
#include "hc2/serialize.hpp"
#include "hc2/types.hpp"

namespace hc2 {

/// Binary information-gain tree over a plain feature matrix (the base
/// learner shared by the interval forest and the rotation forest).
///
/// Split selection at a node scans every column; candidate thresholds are
/// midpoints of consecutive distinct sorted values. Best split by entropy
/// gain, ties by larger margin (threshold distance to the nearest value),
/// then by lower column index. A node becomes a leaf when pure, when no
/// split has positive gain, or when it holds <= 1 case.
class InfoGainTree {
 public:
  struct Node {
    bool leaf = true;
    int feature = -1;
    double threshold = 0.0;
    int left = -1;
    int right = -1;
    Vector distribution;  // leaves only
  };

  InfoGainTree() = default;

  static InfoGainTree fit(const Matrix& features, const std::vector<int>& labels,
                          Index n_classes);

  /// Leaf class distribution for one feature row.
  const Vector& leaf_distribution(const Eigen::Ref<const Vector>& row) const;

  /// Argmax of the leaf distribution, lowest index on ties.
  int predict(const Eigen::Ref<const Vector>& row) const;

  const std::vector<Node>& nodes() const { return nodes_; }

  void save(ByteWriter& w) const;
  static InfoGainTree load(ByteReader& r);

 private:
  int build(const Matrix& features, const std::vector<int>& labels, Index n_classes,
            std::vector<int>& indices);
  std::vector<Node> nodes_;
};

/// Entropy (base 2) of a class-count vector; exposed for the split oracle
/// tests.
double entropy_bits(const std::vector<Index>& counts, Index total);

}  // namespace hc2
