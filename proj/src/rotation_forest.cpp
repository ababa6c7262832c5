#include "hc2/rotation_forest.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "hc2/parallel.hpp"
#include "hc2/resample.hpp"

namespace hc2::stc {

Matrix principal_components(const Matrix& submatrix) {
  Index p = submatrix.cols();
  if (submatrix.rows() < 2) return Matrix::Identity(p, p);
  Matrix centered = submatrix.rowwise() - submatrix.colwise().mean();
  Matrix cov = centered.transpose() * centered / static_cast<double>(submatrix.rows() - 1);
  Eigen::SelfAdjointEigenSolver<Matrix> solver(cov);
  if (solver.info() != Eigen::Success) return Matrix::Identity(p, p);
  Matrix components(p, p);
  // eigenvalues come out ascending; store descending and fix signs
  for (Index c = 0; c < p; ++c) {
    Vector v = solver.eigenvectors().col(p - 1 - c);
    Index strongest = 0;
    for (Index i = 1; i < p; ++i)
      if (std::abs(v[i]) > std::abs(v[strongest])) strongest = i;
    if (v[strongest] < 0) v = -v;
    components.col(c) = v;
  }
  return components;
}

Vector RotationTree::rotate(const Eigen::Ref<const Vector>& features) const {
  Vector out(features.size());
  Index at = 0;
  for (const auto& group : groups) {
    auto g = static_cast<Index>(group.columns.size());
    Vector slice(g);
    for (Index i = 0; i < g; ++i) slice[i] = features[group.columns[static_cast<std::size_t>(i)]];
    out.segment(at, g) = group.rotation.transpose() * slice;
    at += g;
  }
  return out;
}

void RotationTree::save(ByteWriter& w) const {
  w.u64(groups.size());
  for (const auto& g : groups) {
    w.vec_i32(g.columns);
    w.matrix(g.rotation);
  }
  tree.save(w);
  w.vec_i32(bag_indices);
}

RotationTree RotationTree::load(ByteReader& r) {
  RotationTree t;
  auto n = r.u64();
  for (std::uint64_t i = 0; i < n; ++i) {
    RotationGroup g;
    g.columns = r.vec_i32();
    g.rotation = r.matrix();
    t.groups.push_back(std::move(g));
  }
  t.tree = InfoGainTree::load(r);
  t.bag_indices = r.vec_i32();
  return t;
}

ClassDistribution RotationForest::predict(const Eigen::Ref<const Vector>& features) const {
  Vector sum = Vector::Zero(n_classes);
  for (const auto& t : trees) sum += t.tree.leaf_distribution(t.rotate(features));
  return ClassDistribution::from_scores(sum);
}

void RotationForest::save(ByteWriter& w) const {
  w.u64(trees.size());
  for (const auto& t : trees) t.save(w);
  w.i64(n_classes);
}

RotationForest RotationForest::load(ByteReader& r) {
  RotationForest f;
  auto n = r.u64();
  for (std::uint64_t i = 0; i < n; ++i) f.trees.push_back(RotationTree::load(r));
  f.n_classes = r.i64();
  return f;
}

namespace {

struct RotfBuildState {
  int next_tree = 0;
  std::vector<RotationTree> trees;

  void save(ByteWriter& w) const {
    w.i32(next_tree);
    w.u64(trees.size());
    for (const auto& t : trees) t.save(w);
  }
  static RotfBuildState load(ByteReader& r) {
    RotfBuildState s;
    s.next_tree = r.i32();
    auto n = r.u64();
    for (std::uint64_t i = 0; i < n; ++i) s.trees.push_back(RotationTree::load(r));
    return s;
  }
};

constexpr double kZeroVariance = 1e-12;

}  // namespace

RotationForest build_rotation_forest(const Matrix& features, const std::vector<int>& labels,
                                     Index n_classes, const RotationForestConfig& config,
                                     const RandomStream& stream, BuildMonitor* monitor,
                                     const std::vector<std::uint8_t>* resume_state) {
  Index n = features.rows();
  Index p = features.cols();
  if (n < 2) throw Hc2Error("rotation forest: needs >= 2 cases");

  RotfBuildState state;
  if (resume_state) {
    ByteReader r(*resume_state);
    state = RotfBuildState::load(r);
  }

  auto build_one = [&](int t) {
    RandomStream tree_stream = stream.child(static_cast<std::uint64_t>(t));
    RandomStream draw = tree_stream.child(0);

    RotationTree tree;
    std::vector<int> rows;
    if (config.bagging) {
      RandomStream bag_stream = tree_stream.child(1);
      tree.bag_indices = bootstrap_sample(n, bag_stream);
      rows = tree.bag_indices;
    } else {
      rows.resize(static_cast<std::size_t>(n));
      for (Index i = 0; i < n; ++i) rows[static_cast<std::size_t>(i)] = static_cast<int>(i);
    }

    std::vector<int> order(static_cast<std::size_t>(p));
    for (Index c = 0; c < p; ++c) order[static_cast<std::size_t>(c)] = static_cast<int>(c);
    draw.shuffle(order);

    for (std::size_t at = 0; at < order.size(); at += static_cast<std::size_t>(config.group_size)) {
      RotationGroup group;
      for (std::size_t j = at;
           j < std::min(order.size(), at + static_cast<std::size_t>(config.group_size)); ++j)
        group.columns.push_back(order[j]);
      auto g = static_cast<Index>(group.columns.size());

      // random class subset; empty draws fall back to a single random class
      std::vector<bool> wanted(static_cast<std::size_t>(n_classes), false);
      bool any = false;
      for (Index c = 0; c < n_classes; ++c) {
        if (draw.uniform_int(2) == 1) {
          wanted[static_cast<std::size_t>(c)] = true;
          any = true;
        }
      }
      if (!any) wanted[draw.uniform_int(static_cast<std::uint64_t>(n_classes))] = true;

      std::vector<int> member_rows;
      for (int row : rows)
        if (wanted[static_cast<std::size_t>(labels[static_cast<std::size_t>(row)])])
          member_rows.push_back(row);
      if (member_rows.empty()) member_rows = rows;

      auto sample_size = std::max<std::size_t>(
          1, static_cast<std::size_t>(0.75 * static_cast<double>(member_rows.size())));
      std::vector<int> sampled(sample_size);
      for (auto& s : sampled)
        s = member_rows[draw.uniform_int(member_rows.size())];

      Matrix sub(static_cast<Index>(sampled.size()), g);
      for (std::size_t i = 0; i < sampled.size(); ++i)
        for (Index c = 0; c < g; ++c)
          sub(static_cast<Index>(i), c) = features(sampled[i], group.columns[static_cast<std::size_t>(c)]);

      // zero-variance columns (within the sample) stay out of the PCA
      std::vector<Index> keep;
      for (Index c = 0; c < g; ++c) {
        double mu = sub.col(c).mean();
        double var = (sub.col(c).array() - mu).square().sum() /
                     static_cast<double>(sub.rows());
        if (var > kZeroVariance) keep.push_back(c);
      }

      group.rotation = Matrix::Identity(g, g);
      if (keep.size() >= 2) {
        Matrix kept(sub.rows(), static_cast<Index>(keep.size()));
        for (std::size_t c = 0; c < keep.size(); ++c) kept.col(static_cast<Index>(c)) = sub.col(keep[c]);
        Matrix components = principal_components(kept);
        for (std::size_t a = 0; a < keep.size(); ++a)
          for (std::size_t b = 0; b < keep.size(); ++b)
            group.rotation(keep[a], keep[b]) = components(static_cast<Index>(a), static_cast<Index>(b));
      }
      tree.groups.push_back(std::move(group));
    }

    Matrix rotated(static_cast<Index>(rows.size()), p);
    std::vector<int> row_labels(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      rotated.row(static_cast<Index>(i)) = tree.rotate(features.row(rows[i]).transpose()).transpose();
      row_labels[i] = labels[static_cast<std::size_t>(rows[i])];
    }
    tree.tree = InfoGainTree::fit(rotated, row_labels, n_classes);
    return tree;
  };

  UnitScheduler scheduler(config.contract);
  auto checkpoint = [&]() {
    if (monitor)
      monitor->unit_done([&](ByteWriter& w) { state.save(w); });
  };

  if (!config.contract && config.threads > 1 && state.next_tree < config.n_trees) {
    int first = state.next_tree;
    int count = config.n_trees - first;
    std::vector<RotationTree> built(static_cast<std::size_t>(count));
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

  if (state.trees.empty()) throw Hc2Error("rotation forest: no trees built");

  RotationForest forest;
  forest.trees = std::move(state.trees);
  forest.n_classes = n_classes;
  return forest;
}

}  // namespace hc2::stc
