#include "hc2/resample.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace hc2 {

std::pair<TimeSeriesDataset, TimeSeriesDataset> stratified_resample(
    const TimeSeriesDataset& merged, Index original_train_size, std::uint64_t seed) {
  Index n = merged.n_cases();
  if (original_train_size < 1 || original_train_size >= n)
    throw Hc2Error("stratified_resample: original train size must be in [1, n)");

  std::vector<int> train_idx, test_idx;
  if (seed == 0) {
    for (Index i = 0; i < original_train_size; ++i) train_idx.push_back(static_cast<int>(i));
    for (Index i = original_train_size; i < n; ++i) test_idx.push_back(static_cast<int>(i));
  } else {
    Index c = merged.n_classes();
    std::vector<Index> train_counts(static_cast<std::size_t>(c), 0);
    for (Index i = 0; i < original_train_size; ++i)
      train_counts[static_cast<std::size_t>(merged.label_of(i))]++;

    std::vector<std::vector<int>> by_class(static_cast<std::size_t>(c));
    for (Index i = 0; i < n; ++i)
      by_class[static_cast<std::size_t>(merged.label_of(i))].push_back(static_cast<int>(i));

    RandomStream stream(seed);
    for (Index cls = 0; cls < c; ++cls) {
      auto& pool = by_class[static_cast<std::size_t>(cls)];
      Index want = train_counts[static_cast<std::size_t>(cls)];
      if (static_cast<Index>(pool.size()) < want)
        throw Hc2Error("stratified_resample: class '" + merged.class_labels()[static_cast<std::size_t>(cls)] +
                       "' has " + std::to_string(pool.size()) + " cases but the default train split needs " +
                       std::to_string(want));
      RandomStream cls_stream = stream.child(static_cast<std::uint64_t>(cls));
      cls_stream.shuffle(pool);
      for (Index j = 0; j < static_cast<Index>(pool.size()); ++j) {
        if (j < want)
          train_idx.push_back(pool[static_cast<std::size_t>(j)]);
        else
          test_idx.push_back(pool[static_cast<std::size_t>(j)]);
      }
    }
    std::sort(train_idx.begin(), train_idx.end());
    std::sort(test_idx.begin(), test_idx.end());
  }
  return {merged.subset(train_idx), merged.subset(test_idx)};
}

std::vector<int> stratified_subsample(const TimeSeriesDataset& data, double fraction,
                                      RandomStream& stream) {
  Index c = data.n_classes();
  std::vector<std::vector<int>> by_class(static_cast<std::size_t>(c));
  for (Index i = 0; i < data.n_cases(); ++i)
    by_class[static_cast<std::size_t>(data.label_of(i))].push_back(static_cast<int>(i));

  std::vector<int> picked;
  for (Index cls = 0; cls < c; ++cls) {
    auto& pool = by_class[static_cast<std::size_t>(cls)];
    if (pool.empty()) continue;
    auto want = static_cast<std::size_t>(
        std::max(1.0, std::floor(fraction * static_cast<double>(pool.size()) + 0.5)));
    want = std::min(want, pool.size());
    stream.shuffle(pool);
    picked.insert(picked.end(), pool.begin(), pool.begin() + static_cast<std::ptrdiff_t>(want));
  }
  std::sort(picked.begin(), picked.end());
  return picked;
}

std::vector<int> bootstrap_sample(Index n, RandomStream& stream) {
  std::vector<int> out(static_cast<std::size_t>(n));
  for (auto& v : out) v = static_cast<int>(stream.uniform_int(static_cast<std::uint64_t>(n)));
  return out;
}

}  // namespace hc2
