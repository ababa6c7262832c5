#pragma once

#include <optional>
#include <vector>

#include "hc2/rotation_forest.hpp"
#include "hc2/shapelets.hpp"

namespace hc2::stc {

struct StcConfig {
  /// Shapelet-search budget; when neither field is set the search runs its
  /// default one-hour contract (small candidate spaces finish by exhaustion).
  std::optional<Millis> search_time;
  std::optional<std::int64_t> search_candidates;
  int rotation_forest_trees = 200;
  std::optional<Millis> rotation_forest_contract;
  int threads = 1;
};

class StcModel {
 public:
  std::vector<Shapelet> shapelets;
  RotationForest forest;
  Index n_classes = 0;

  ClassDistribution predict(const Matrix& case_values) const;

  void save(ByteWriter& w) const;
  static StcModel load(ByteReader& r);
};

/// Contracted random shapelet search, distance transform, then a rotation
/// forest on the transformed train data.
StcModel build_stc(const TimeSeriesDataset& train, const StcConfig& config,
                   const RandomStream& stream, BuildMonitor* monitor = nullptr,
                   const std::vector<std::uint8_t>* resume_state = nullptr);

}  // namespace hc2::stc
