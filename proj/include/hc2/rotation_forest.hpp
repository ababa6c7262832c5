#pragma once

#include <optional>
#include <vector>

#include "hc2/budget.hpp"
#include "hc2/dataset.hpp"
#include "hc2/rng.hpp"
#include "hc2/tree.hpp"

namespace hc2::stc {

/// One PCA block: the rotation maps the group's columns onto its principal
/// components (orthonormal, sign-fixed), identity for dropped columns.
struct RotationGroup {
  std::vector<int> columns;
  Matrix rotation;  // |columns| x |columns|
};

struct RotationTree {
  std::vector<RotationGroup> groups;
  InfoGainTree tree;
  std::vector<int> bag_indices;  // bagging mode only

  Vector rotate(const Eigen::Ref<const Vector>& features) const;
  void save(ByteWriter& w) const;
  static RotationTree load(ByteReader& r);
};

struct RotationForestConfig {
  int n_trees = 200;
  int group_size = 3;
  std::optional<Millis> contract;
  int threads = 1;
  bool bagging = false;
};

class RotationForest {
 public:
  std::vector<RotationTree> trees;
  Index n_classes = 0;

  /// Average of the trees' leaf distributions, renormalised.
  ClassDistribution predict(const Eigen::Ref<const Vector>& features) const;

  void save(ByteWriter& w) const;
  static RotationForest load(ByteReader& r);
};

/// Per tree: random column groups of `group_size`; per group a random class
/// subset, a 75% bootstrap of those cases and a full principal-component
/// basis (largest-magnitude loading made positive). Trees fit on the rotated
/// full matrix (or the tree's bootstrap in bagging mode).
RotationForest build_rotation_forest(const Matrix& features, const std::vector<int>& labels,
                                     Index n_classes, const RotationForestConfig& config,
                                     const RandomStream& stream, BuildMonitor* monitor = nullptr,
                                     const std::vector<std::uint8_t>* resume_state = nullptr);

/// PCA basis of a group submatrix, eigenvalue-descending, sign-fixed;
/// exposed for the eigen-oracle tests.
Matrix principal_components(const Matrix& submatrix);

}  // namespace hc2::stc
