#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "hc2/dataset.hpp"
#include "hc2/rng.hpp"

namespace hc2 {

/// Stratified train/test resample of a merged dataset whose first
/// original_train_size cases are the archive's default train split.
///
/// Resample 0 returns the default split unchanged. Any other seed produces a
/// train split with exactly the default split's per-class counts; the
/// remaining cases form the test split. Deterministic in seed.
std::pair<TimeSeriesDataset, TimeSeriesDataset> stratified_resample(
    const TimeSeriesDataset& merged, Index original_train_size, std::uint64_t seed);

/// Stratified subsample without replacement: per class, round(fraction * n_c)
/// cases (at least one). Returns sorted case indices.
std::vector<int> stratified_subsample(const TimeSeriesDataset& data, double fraction,
                                      RandomStream& stream);

/// n draws with replacement from [0, n); the classic bootstrap sample.
std::vector<int> bootstrap_sample(Index n, RandomStream& stream);

}  // namespace hc2
