#include "hc2/drcif.hpp"

#include <cmath>

#include "hc2/parallel.hpp"
#include "hc2/resample.hpp"
#include "hc2/summary_features.hpp"
#include "hc2/transforms.hpp"

namespace hc2::drcif {

Representations compute_representations(const Matrix& case_values) {
  Index d = case_values.rows();
  Index m = case_values.cols();
  Representations reps;
  reps[0] = case_values;
  reps[1].resize(d, m - 1);
  reps[2].resize(d, m / 2);
  for (Index dim = 0; dim < d; ++dim) {
    reps[1].row(dim) = first_order_differences(case_values.row(dim).transpose()).transpose();
    reps[2].row(dim) = periodogram(case_values.row(dim).transpose()).transpose();
  }
  return reps;
}

std::array<Index, kRepresentations> representation_lengths(Index m) {
  return {m, m - 1, m / 2};
}

int intervals_per_representation(Index rep_length, Index d) {
  return 4 + static_cast<int>(std::floor(
                 std::sqrt(static_cast<double>(d)) * std::sqrt(static_cast<double>(rep_length)) /
                 3.0));
}

TreeInputs sample_tree_inputs(Index m, Index d, int attributes, RandomStream& stream) {
  auto lengths = representation_lengths(m);
  for (Index rm : lengths)
    if (rm < 6)
      throw Hc2Error("DrCIF: representation length " + std::to_string(rm) +
                     " too short (needs >= 6, so series length >= 12)");

  TreeInputs inputs;
  for (int y = 0; y < kRepresentations; ++y) {
    Index rm = lengths[static_cast<std::size_t>(y)];
    Index max_len = rm / 2;
    int k = intervals_per_representation(rm, d);
    for (int j = 0; j < k; ++j) {
      Interval iv;
      iv.representation = y;
      iv.length = 3 + static_cast<int>(stream.uniform_int(static_cast<std::uint64_t>(max_len - 3 + 1)));
      iv.start = static_cast<int>(stream.uniform_int(static_cast<std::uint64_t>(rm - iv.length + 1)));
      iv.dimension = static_cast<int>(stream.uniform_int(static_cast<std::uint64_t>(d)));
      inputs.intervals.push_back(iv);
    }
  }
  inputs.feature_ids = stream.sample_without_replacement(kSummaryFeatureCount, attributes);
  return inputs;
}

Vector feature_row(const Representations& reps, const TreeInputs& inputs) {
  auto a = static_cast<Index>(inputs.feature_ids.size());
  Vector row(static_cast<Index>(inputs.intervals.size()) * a);
  Index at = 0;
  for (const auto& iv : inputs.intervals) {
    auto slice = reps[static_cast<std::size_t>(iv.representation)]
                     .row(iv.dimension)
                     .segment(iv.start, iv.length)
                     .transpose();
    for (int f : inputs.feature_ids) row[at++] = summary_feature(f, slice);
  }
  return row;
}

Matrix build_feature_matrix(const std::vector<Representations>& cases, const TreeInputs& inputs) {
  auto n = static_cast<Index>(cases.size());
  Matrix features(n, static_cast<Index>(inputs.intervals.size() * inputs.feature_ids.size()));
  for (Index i = 0; i < n; ++i)
    features.row(i) = feature_row(cases[static_cast<std::size_t>(i)], inputs).transpose();
  return features;
}

void DrcifTree::save(ByteWriter& w) const {
  w.u64(inputs.intervals.size());
  for (const auto& iv : inputs.intervals) {
    w.i32(iv.representation);
    w.i32(iv.dimension);
    w.i32(iv.start);
    w.i32(iv.length);
  }
  w.vec_i32(inputs.feature_ids);
  tree.save(w);
  w.vec_i32(bag_indices);
}

DrcifTree DrcifTree::load(ByteReader& r) {
  DrcifTree t;
  auto n = r.u64();
  for (std::uint64_t i = 0; i < n; ++i) {
    Interval iv;
    iv.representation = r.i32();
    iv.dimension = r.i32();
    iv.start = r.i32();
    iv.length = r.i32();
    t.inputs.intervals.push_back(iv);
  }
  t.inputs.feature_ids = r.vec_i32();
  t.tree = InfoGainTree::load(r);
  t.bag_indices = r.vec_i32();
  return t;
}

int DrcifForest::tree_vote(const DrcifTree& t, const Representations& reps) const {
  return t.tree.predict(feature_row(reps, t.inputs));
}

ClassDistribution DrcifForest::predict(const Matrix& case_values) const {
  Representations reps = compute_representations(case_values);
  Vector votes = Vector::Zero(n_classes);
  for (const auto& t : trees) votes[tree_vote(t, reps)] += 1.0;
  return ClassDistribution::from_scores(votes);
}

void DrcifForest::save(ByteWriter& w) const {
  w.u64(trees.size());
  for (const auto& t : trees) t.save(w);
  w.i64(n_classes);
  w.i64(series_length);
  w.i64(n_dimensions);
}

DrcifForest DrcifForest::load(ByteReader& r) {
  DrcifForest f;
  auto n = r.u64();
  for (std::uint64_t i = 0; i < n; ++i) f.trees.push_back(DrcifTree::load(r));
  f.n_classes = r.i64();
  f.series_length = r.i64();
  f.n_dimensions = r.i64();
  return f;
}

namespace {

struct DrcifBuildState {
  int next_tree = 0;
  std::vector<DrcifTree> trees;

  void save(ByteWriter& w) const {
    w.i32(next_tree);
    w.u64(trees.size());
    for (const auto& t : trees) t.save(w);
  }
  static DrcifBuildState load(ByteReader& r) {
    DrcifBuildState s;
    s.next_tree = r.i32();
    auto n = r.u64();
    for (std::uint64_t i = 0; i < n; ++i) s.trees.push_back(DrcifTree::load(r));
    return s;
  }
};

}  // namespace

DrcifForest build_drcif(const TimeSeriesDataset& train, const DrcifConfig& config,
                        const RandomStream& stream, BuildMonitor* monitor,
                        const std::vector<std::uint8_t>* resume_state) {
  if (train.series_length() < 12)
    throw Hc2Error("DrCIF: series length must be >= 12 so every representation has length >= 6");

  DrcifBuildState state;
  if (resume_state) {
    ByteReader r(*resume_state);
    state = DrcifBuildState::load(r);
  }

  Index n = train.n_cases();
  std::vector<Representations> reps(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i)
    reps[static_cast<std::size_t>(i)] = compute_representations(train.case_at(i).values);
  std::vector<int> labels = train.labels();

  auto build_one = [&](int i) {
    RandomStream tree_stream = stream.child(static_cast<std::uint64_t>(i));
    RandomStream input_stream = tree_stream.child(0);
    DrcifTree t;
    t.inputs = sample_tree_inputs(train.series_length(), train.n_dimensions(),
                                  config.attributes_per_tree, input_stream);
    std::vector<int> rows;
    if (config.bagging) {
      RandomStream bag_stream = tree_stream.child(1);
      t.bag_indices = bootstrap_sample(n, bag_stream);
      rows = t.bag_indices;
    } else {
      rows.resize(static_cast<std::size_t>(n));
      for (Index r = 0; r < n; ++r) rows[static_cast<std::size_t>(r)] = static_cast<int>(r);
    }
    std::vector<Representations> tree_cases;
    std::vector<int> tree_labels;
    tree_cases.reserve(rows.size());
    for (int row : rows) {
      tree_cases.push_back(reps[static_cast<std::size_t>(row)]);
      tree_labels.push_back(labels[static_cast<std::size_t>(row)]);
    }
    Matrix features = build_feature_matrix(tree_cases, t.inputs);
    t.tree = InfoGainTree::fit(features, tree_labels, train.n_classes());
    return t;
  };

  UnitScheduler scheduler(config.contract);
  auto checkpoint = [&]() {
    if (monitor)
      monitor->unit_done([&](ByteWriter& w) { state.save(w); });
  };

  if (!config.contract && config.threads > 1 && state.next_tree < config.n_trees) {
    int first = state.next_tree;
    int count = config.n_trees - first;
    std::vector<DrcifTree> built(static_cast<std::size_t>(count));
    parallel_for(count, config.threads,
                 [&](int t) { built[static_cast<std::size_t>(t)] = build_one(first + t); });
    for (int t = 0; t < count; ++t) {
      state.trees.push_back(std::move(built[static_cast<std::size_t>(t)]));
      state.next_tree = first + t + 1;
      checkpoint();
    }
  } else {
    int built_this_run = 0;
    while (state.next_tree < config.n_trees && scheduler.allow_next(built_this_run)) {
      state.trees.push_back(build_one(state.next_tree));
      state.next_tree++;
      built_this_run++;
      checkpoint();
    }
  }

  if (state.trees.empty()) throw Hc2Error("DrCIF: no trees built");

  DrcifForest forest;
  forest.trees = std::move(state.trees);
  forest.n_classes = train.n_classes();
  forest.series_length = train.series_length();
  forest.n_dimensions = train.n_dimensions();
  return forest;
}

}  // namespace hc2::drcif
