#include "hc2/shapelets.hpp"

#include <algorithm>
#include <cmath>

#include "hc2/transforms.hpp"
#include "hc2/tree.hpp"

namespace hc2::stc {

void Shapelet::save(ByteWriter& w) const {
  w.vector(values);
  w.i32(dimension);
  w.i32(origin_case);
  w.i32(origin_start);
  w.i32(target_class);
  w.f64(quality);
}

Shapelet Shapelet::load(ByteReader& r) {
  Shapelet s;
  s.values = r.vector();
  s.dimension = r.i32();
  s.origin_case = r.i32();
  s.origin_start = r.i32();
  s.target_class = r.i32();
  s.quality = r.f64();
  return s;
}

namespace {

constexpr double kDegenerateSigma = 1e-12;

/// Prefix sums of one series and its squares, for O(1) window mean/sigma.
struct RollingStats {
  std::vector<double> sum, sum_sq;

  explicit RollingStats(const Eigen::Ref<const Vector>& x) {
    sum.resize(static_cast<std::size_t>(x.size()) + 1, 0.0);
    sum_sq.resize(static_cast<std::size_t>(x.size()) + 1, 0.0);
    for (Index i = 0; i < x.size(); ++i) {
      sum[static_cast<std::size_t>(i) + 1] = sum[static_cast<std::size_t>(i)] + x[i];
      sum_sq[static_cast<std::size_t>(i) + 1] = sum_sq[static_cast<std::size_t>(i)] + x[i] * x[i];
    }
  }

  void window(Index start, Index len, double& mu, double& sigma) const {
    double s = sum[static_cast<std::size_t>(start + len)] - sum[static_cast<std::size_t>(start)];
    double ss = sum_sq[static_cast<std::size_t>(start + len)] - sum_sq[static_cast<std::size_t>(start)];
    mu = s / static_cast<double>(len);
    double var = ss / static_cast<double>(len) - mu * mu;
    sigma = var > 0 ? std::sqrt(var) : 0.0;
  }
};

double distance_with_stats(const Eigen::Ref<const Vector>& shapelet_values,
                           const Eigen::Ref<const Vector>& series, const RollingStats& stats) {
  Index ls = shapelet_values.size();
  Index m = series.size();
  if (ls > m) throw Hc2Error("shapelet longer than the series");
  bool shapelet_zero = shapelet_values.isZero(0.0);
  double best = std::numeric_limits<double>::infinity();
  for (Index start = 0; start + ls <= m; ++start) {
    double mu, sigma;
    stats.window(start, ls, mu, sigma);
    double d;
    if (sigma <= kDegenerateSigma) {
      d = shapelet_zero ? 0.0 : 1.0;
    } else if (shapelet_zero) {
      d = 1.0;
    } else {
      // sum_i s_i == 0, so sum_i s_i * z_i reduces to dot(s, window)/sigma
      double dot = shapelet_values.dot(series.segment(start, ls));
      d = 2.0 - 2.0 * dot / (static_cast<double>(ls) * sigma);
    }
    if (d < best) best = d;
    if (best <= 0.0) break;
  }
  return std::max(best, 0.0);
}

}  // namespace

double shapelet_distance(const Eigen::Ref<const Vector>& shapelet_values,
                         const Eigen::Ref<const Vector>& series) {
  RollingStats stats(series);
  return distance_with_stats(shapelet_values, series, stats);
}

double binary_info_gain(std::vector<std::pair<double, bool>> pairs) {
  std::size_t n = pairs.size();
  if (n < 2) return 0.0;
  std::sort(pairs.begin(), pairs.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });

  Index pos_total = 0;
  for (const auto& [d, t] : pairs)
    if (t) ++pos_total;
  std::vector<Index> parent{pos_total, static_cast<Index>(n) - pos_total};
  double parent_entropy = entropy_bits(parent, static_cast<Index>(n));

  double best = 0.0;
  Index pos_left = 0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    if (pairs[i].second) ++pos_left;
    if (pairs[i + 1].first <= pairs[i].first) continue;
    auto n_left = static_cast<Index>(i + 1);
    auto n_right = static_cast<Index>(n) - n_left;
    std::vector<Index> left{pos_left, n_left - pos_left};
    std::vector<Index> right{pos_total - pos_left, n_right - (pos_total - pos_left)};
    double gain = parent_entropy -
                  (static_cast<double>(n_left) * entropy_bits(left, n_left) +
                   static_cast<double>(n_right) * entropy_bits(right, n_right)) /
                      static_cast<double>(n);
    best = std::max(best, gain);
  }
  return best;
}

double shapelet_quality(const Shapelet& shapelet, const TimeSeriesDataset& train) {
  std::vector<std::pair<double, bool>> pairs;
  pairs.reserve(static_cast<std::size_t>(train.n_cases()));
  for (Index i = 0; i < train.n_cases(); ++i) {
    double d = shapelet_distance(shapelet.values,
                                 train.case_at(i).values.row(shapelet.dimension).transpose());
    pairs.emplace_back(d, train.label_of(i) == shapelet.target_class);
  }
  return binary_info_gain(std::move(pairs));
}

std::int64_t shapelet_candidate_space(const TimeSeriesDataset& train) {
  auto m = static_cast<std::int64_t>(train.series_length());
  return static_cast<std::int64_t>(train.n_cases()) * train.n_dimensions() * (m - 1) * (m - 2) / 2;
}

Index shapelet_pool_cap(const TimeSeriesDataset& train) {
  return std::min<Index>(10 * train.n_cases(), 1000);
}

namespace {

/// Candidate spaces at or below this size are enumerated outright, which
/// keeps small problems deterministic under any clock budget.
constexpr std::int64_t kExhaustiveCap = 200000;

struct PoolEntry {
  Shapelet shapelet;
  std::int64_t insertion = 0;
};

struct SearchState {
  std::int64_t next_candidate = 0;
  std::int64_t inserted = 0;
  std::vector<std::vector<PoolEntry>> pools;  // per class

  void save(ByteWriter& w) const {
    w.i64(next_candidate);
    w.i64(inserted);
    w.u64(pools.size());
    for (const auto& pool : pools) {
      w.u64(pool.size());
      for (const auto& e : pool) {
        e.shapelet.save(w);
        w.i64(e.insertion);
      }
    }
  }
  static SearchState load(ByteReader& r) {
    SearchState s;
    s.next_candidate = r.i64();
    s.inserted = r.i64();
    s.pools.resize(r.u64());
    for (auto& pool : s.pools) {
      auto n = r.u64();
      for (std::uint64_t i = 0; i < n; ++i) {
        PoolEntry e;
        e.shapelet = Shapelet::load(r);
        e.insertion = r.i64();
        pool.push_back(std::move(e));
      }
    }
    return s;
  }
};

struct Candidate {
  int case_idx, dimension, length, start;
};

Candidate candidate_from_index(const TimeSeriesDataset& train, std::int64_t index) {
  auto m = static_cast<std::int64_t>(train.series_length());
  std::int64_t per_dim = (m - 1) * (m - 2) / 2;
  std::int64_t per_case = per_dim * train.n_dimensions();
  Candidate c;
  c.case_idx = static_cast<int>(index / per_case);
  index %= per_case;
  c.dimension = static_cast<int>(index / per_dim);
  index %= per_dim;
  // lengths 3..m, each with m-len+1 starts
  int len = 3;
  for (;;) {
    std::int64_t starts = m - len + 1;
    if (index < starts) break;
    index -= starts;
    ++len;
  }
  c.length = len;
  c.start = static_cast<int>(index);
  return c;
}

Candidate candidate_from_stream(const TimeSeriesDataset& train, RandomStream& stream) {
  Candidate c;
  c.case_idx = static_cast<int>(stream.uniform_int(static_cast<std::uint64_t>(train.n_cases())));
  c.dimension = static_cast<int>(stream.uniform_int(static_cast<std::uint64_t>(train.n_dimensions())));
  c.length = 3 + static_cast<int>(stream.uniform_int(static_cast<std::uint64_t>(train.series_length() - 2)));
  c.start = static_cast<int>(stream.uniform_int(static_cast<std::uint64_t>(train.series_length() - c.length + 1)));
  return c;
}

bool suppressed(const SearchState& state, const Candidate& c) {
  for (const auto& pool : state.pools) {
    for (const auto& e : pool) {
      if (e.shapelet.origin_case != c.case_idx || e.shapelet.dimension != c.dimension) continue;
      int lo = std::max(c.start, e.shapelet.origin_start);
      int hi = std::min(c.start + c.length,
                        e.shapelet.origin_start + static_cast<int>(e.shapelet.values.size()));
      if (hi - lo > c.length / 2) return true;
    }
  }
  return false;
}

void insert_into_pool(SearchState& state, Shapelet&& s, Index per_class_cap) {
  auto& pool = state.pools[static_cast<std::size_t>(s.target_class)];
  PoolEntry entry{std::move(s), state.inserted++};
  if (static_cast<Index>(pool.size()) < per_class_cap) {
    pool.push_back(std::move(entry));
    return;
  }
  // evict the weakest; among equal qualities the latest-inserted loses
  std::size_t weakest = 0;
  for (std::size_t i = 1; i < pool.size(); ++i) {
    if (pool[i].shapelet.quality < pool[weakest].shapelet.quality ||
        (pool[i].shapelet.quality == pool[weakest].shapelet.quality &&
         pool[i].insertion > pool[weakest].insertion))
      weakest = i;
  }
  if (entry.shapelet.quality > pool[weakest].shapelet.quality) pool[weakest] = std::move(entry);
}

}  // namespace

std::vector<Shapelet> contracted_shapelet_search(const TimeSeriesDataset& train,
                                                 const ShapeletSearchConfig& config,
                                                 const RandomStream& stream,
                                                 BuildMonitor* monitor,
                                                 const std::vector<std::uint8_t>* resume_state) {
  if (train.n_classes() < 2) throw Hc2Error("shapelet search needs >= 2 classes");

  SearchState state;
  if (resume_state) {
    ByteReader r(*resume_state);
    state = SearchState::load(r);
  } else {
    state.pools.resize(static_cast<std::size_t>(train.n_classes()));
  }

  std::int64_t space = shapelet_candidate_space(train);
  std::int64_t count_cap = config.max_candidates.value_or(std::numeric_limits<std::int64_t>::max());
  bool exhaustive = space <= std::min(count_cap, kExhaustiveCap);
  std::int64_t target = exhaustive ? space : count_cap;

  std::optional<Millis> time_budget = config.time_budget;
  if (!config.max_candidates && !time_budget && !exhaustive)
    time_budget = Millis(3600 * 1000);  // default one-hour search
  UnitScheduler scheduler(time_budget);

  Index per_class_cap =
      std::max<Index>(1, shapelet_pool_cap(train) / train.n_classes());

  // Precompute rolling stats per (case, dimension) once for the whole search.
  std::vector<RollingStats> stats;
  stats.reserve(static_cast<std::size_t>(train.n_cases() * train.n_dimensions()));
  for (Index i = 0; i < train.n_cases(); ++i)
    for (Index dim = 0; dim < train.n_dimensions(); ++dim)
      stats.emplace_back(train.case_at(i).values.row(dim).transpose());
  auto stats_at = [&](Index case_idx, Index dim) -> const RollingStats& {
    return stats[static_cast<std::size_t>(case_idx * train.n_dimensions() + dim)];
  };

  constexpr std::int64_t kBatch = 512;
  std::int64_t batches_done = 0;
  while (state.next_candidate < target) {
    if (!scheduler.allow_next(static_cast<int>(batches_done))) break;
    std::int64_t end = std::min(target, state.next_candidate + kBatch);
    for (std::int64_t idx = state.next_candidate; idx < end; ++idx) {
      Candidate c;
      if (exhaustive) {
        c = candidate_from_index(train, idx);
      } else {
        RandomStream cand_stream = stream.child(static_cast<std::uint64_t>(idx));
        c = candidate_from_stream(train, cand_stream);
      }
      if (suppressed(state, c)) continue;

      Shapelet s;
      s.values = z_normalised(
          train.case_at(c.case_idx).values.row(c.dimension).segment(c.start, c.length).transpose());
      s.dimension = c.dimension;
      s.origin_case = c.case_idx;
      s.origin_start = c.start;
      s.target_class = train.label_of(c.case_idx);

      std::vector<std::pair<double, bool>> pairs;
      pairs.reserve(static_cast<std::size_t>(train.n_cases()));
      for (Index i = 0; i < train.n_cases(); ++i) {
        double d = distance_with_stats(s.values, train.case_at(i).values.row(s.dimension).transpose(),
                                       stats_at(i, s.dimension));
        pairs.emplace_back(d, train.label_of(i) == s.target_class);
      }
      s.quality = binary_info_gain(std::move(pairs));
      insert_into_pool(state, std::move(s), per_class_cap);
    }
    state.next_candidate = end;
    ++batches_done;
    if (monitor)
      monitor->unit_done([&](ByteWriter& w) { state.save(w); });
  }

  std::vector<Shapelet> retained;
  for (auto& pool : state.pools) {
    std::sort(pool.begin(), pool.end(), [](const PoolEntry& a, const PoolEntry& b) {
      if (a.shapelet.quality != b.shapelet.quality) return a.shapelet.quality > b.shapelet.quality;
      return a.insertion < b.insertion;
    });
    for (auto& e : pool) retained.push_back(std::move(e.shapelet));
  }
  if (retained.empty()) throw Hc2Error("shapelet search produced no shapelets");
  return retained;
}

Vector shapelet_transform_row(const std::vector<Shapelet>& shapelets, const Matrix& case_values) {
  Vector row(static_cast<Index>(shapelets.size()));
  for (std::size_t s = 0; s < shapelets.size(); ++s)
    row[static_cast<Index>(s)] =
        shapelet_distance(shapelets[s].values, case_values.row(shapelets[s].dimension).transpose());
  return row;
}

Matrix shapelet_transform(const std::vector<Shapelet>& shapelets, const TimeSeriesDataset& data) {
  if (shapelets.empty()) throw Hc2Error("shapelet_transform: empty shapelet set");
  Matrix features(data.n_cases(), static_cast<Index>(shapelets.size()));
  for (Index i = 0; i < data.n_cases(); ++i)
    features.row(i) = shapelet_transform_row(shapelets, data.case_at(i).values).transpose();
  return features;
}

}  // namespace hc2::stc
