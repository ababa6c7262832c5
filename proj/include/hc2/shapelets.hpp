#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "hc2/budget.hpp"
#include "hc2/dataset.hpp"
#include "hc2/rng.hpp"
#include "hc2/serialize.hpp"

namespace hc2::stc {

struct Shapelet {
  Vector values;  // z-normalised (or all-zero when degenerate)
  int dimension = 0;
  int origin_case = -1;
  int origin_start = -1;
  int target_class = -1;  // one-vs-rest class of the origin case
  double quality = 0.0;   // binary information gain

  void save(ByteWriter& w) const;
  static Shapelet load(ByteReader& r);
};

/// Minimum over all alignments of the squared Euclidean distance between the
/// shapelet and the z-normalised window, divided by the shapelet length.
/// Zero-variance windows normalise to all zeros.
double shapelet_distance(const Eigen::Ref<const Vector>& shapelet_values,
                         const Eigen::Ref<const Vector>& series);

/// Maximum information gain over all threshold splits of the sorted distance
/// list against the one-vs-rest labels (base-2 entropy).
double binary_info_gain(std::vector<std::pair<double, bool>> distance_and_target);

double shapelet_quality(const Shapelet& shapelet, const TimeSeriesDataset& train);

struct ShapeletSearchConfig {
  /// Wall-clock budget; enforced through candidate-count extrapolation so a
  /// run is deterministic given its derived count. Defaults to one hour.
  std::optional<Millis> time_budget;
  /// Explicit candidate-count budget; overrides the clock entirely.
  std::optional<std::int64_t> max_candidates;
  int threads = 1;
};

/// Number of (case, dimension, length, start) candidates.
std::int64_t shapelet_candidate_space(const TimeSeriesDataset& train);

/// Retained pool cap: min(10n, 1000) split evenly across classes.
Index shapelet_pool_cap(const TimeSeriesDataset& train);

/// Random search (or full enumeration when the candidate space is small)
/// keeping a per-class best-k pool. Candidates from the same case and
/// dimension overlapping a retained shapelet by more than half their length
/// are skipped. Returns shapelets grouped by class, quality descending.
std::vector<Shapelet> contracted_shapelet_search(const TimeSeriesDataset& train,
                                                 const ShapeletSearchConfig& config,
                                                 const RandomStream& stream,
                                                 BuildMonitor* monitor = nullptr,
                                                 const std::vector<std::uint8_t>* resume_state = nullptr);

/// n x |shapelets| distance features.
Matrix shapelet_transform(const std::vector<Shapelet>& shapelets,
                          const TimeSeriesDataset& data);

Vector shapelet_transform_row(const std::vector<Shapelet>& shapelets, const Matrix& case_values);

}  // namespace hc2::stc
