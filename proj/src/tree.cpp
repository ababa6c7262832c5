#include "hc2/tree.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace hc2 {

double entropy_bits(const std::vector<Index>& counts, Index total) {
  if (total <= 0) return 0.0;
  double h = 0.0;
  for (Index c : counts) {
    if (c > 0) {
      double p = static_cast<double>(c) / static_cast<double>(total);
      h -= p * std::log2(p);
    }
  }
  return h;
}

namespace {

struct SplitChoice {
  double gain = -1.0;
  double margin = -1.0;
  int column = -1;
  double threshold = 0.0;

  bool better_than(const SplitChoice& other) const {
    if (gain != other.gain) return gain > other.gain;
    if (margin != other.margin) return margin > other.margin;
    return column < other.column;
  }
};

}  // namespace

int InfoGainTree::build(const Matrix& features, const std::vector<int>& labels, Index n_classes,
                        std::vector<int>& indices) {
  auto n = static_cast<Index>(indices.size());
  std::vector<Index> counts(static_cast<std::size_t>(n_classes), 0);
  for (int i : indices) counts[static_cast<std::size_t>(labels[static_cast<std::size_t>(i)])]++;

  auto make_leaf = [&]() {
    Node leaf;
    leaf.leaf = true;
    leaf.distribution = Vector::Zero(n_classes);
    for (Index c = 0; c < n_classes; ++c)
      leaf.distribution[c] = static_cast<double>(counts[static_cast<std::size_t>(c)]) /
                             static_cast<double>(n);
    nodes_.push_back(std::move(leaf));
    return static_cast<int>(nodes_.size() - 1);
  };

  double parent_entropy = entropy_bits(counts, n);
  bool pure = false;
  for (Index c = 0; c < n_classes; ++c)
    if (counts[static_cast<std::size_t>(c)] == n) pure = true;
  if (n <= 1 || pure) return make_leaf();

  SplitChoice best;
  std::vector<std::pair<double, int>> column_values(static_cast<std::size_t>(n));
  for (Index col = 0; col < features.cols(); ++col) {
    for (Index i = 0; i < n; ++i) {
      int row = indices[static_cast<std::size_t>(i)];
      column_values[static_cast<std::size_t>(i)] = {features(row, col),
                                                    labels[static_cast<std::size_t>(row)]};
    }
    std::sort(column_values.begin(), column_values.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });

    std::vector<Index> left(static_cast<std::size_t>(n_classes), 0);
    std::vector<Index> right = counts;
    for (Index i = 0; i + 1 < n; ++i) {
      int lbl = column_values[static_cast<std::size_t>(i)].second;
      left[static_cast<std::size_t>(lbl)]++;
      right[static_cast<std::size_t>(lbl)]--;
      double v = column_values[static_cast<std::size_t>(i)].first;
      double next = column_values[static_cast<std::size_t>(i + 1)].first;
      if (next <= v) continue;  // only split between distinct values
      Index n_left = i + 1, n_right = n - n_left;
      double gain = parent_entropy -
                    (static_cast<double>(n_left) * entropy_bits(left, n_left) +
                     static_cast<double>(n_right) * entropy_bits(right, n_right)) /
                        static_cast<double>(n);
      SplitChoice cand{gain, (next - v) / 2.0, static_cast<int>(col), (v + next) / 2.0};
      if (cand.better_than(best)) best = cand;
    }
  }

  if (best.column < 0 || best.gain <= 0.0) return make_leaf();

  std::vector<int> left_idx, right_idx;
  for (int i : indices) {
    if (features(i, best.column) <= best.threshold)
      left_idx.push_back(i);
    else
      right_idx.push_back(i);
  }

  int me = static_cast<int>(nodes_.size());
  nodes_.emplace_back();
  nodes_[static_cast<std::size_t>(me)].leaf = false;
  nodes_[static_cast<std::size_t>(me)].feature = best.column;
  nodes_[static_cast<std::size_t>(me)].threshold = best.threshold;
  int left_node = build(features, labels, n_classes, left_idx);
  int right_node = build(features, labels, n_classes, right_idx);
  nodes_[static_cast<std::size_t>(me)].left = left_node;
  nodes_[static_cast<std::size_t>(me)].right = right_node;
  return me;
}

InfoGainTree InfoGainTree::fit(const Matrix& features, const std::vector<int>& labels,
                               Index n_classes) {
  if (features.rows() < 1) throw Hc2Error("InfoGainTree: empty training set");
  if (static_cast<std::size_t>(features.rows()) != labels.size())
    throw Hc2Error("InfoGainTree: feature/label size mismatch");
  InfoGainTree tree;
  std::vector<int> indices(static_cast<std::size_t>(features.rows()));
  for (std::size_t i = 0; i < indices.size(); ++i) indices[i] = static_cast<int>(i);
  tree.build(features, labels, n_classes, indices);
  return tree;
}

const Vector& InfoGainTree::leaf_distribution(const Eigen::Ref<const Vector>& row) const {
  int at = 0;
  for (;;) {
    const Node& node = nodes_[static_cast<std::size_t>(at)];
    if (node.leaf) return node.distribution;
    at = row[node.feature] <= node.threshold ? node.left : node.right;
  }
}

int InfoGainTree::predict(const Eigen::Ref<const Vector>& row) const {
  const Vector& dist = leaf_distribution(row);
  int best = 0;
  for (Index c = 1; c < dist.size(); ++c)
    if (dist[c] > dist[best]) best = static_cast<int>(c);
  return best;
}

void InfoGainTree::save(ByteWriter& w) const {
  w.u64(nodes_.size());
  for (const auto& node : nodes_) {
    w.u8(node.leaf ? 1 : 0);
    if (node.leaf) {
      w.vector(node.distribution);
    } else {
      w.i32(node.feature);
      w.f64(node.threshold);
      w.i32(node.left);
      w.i32(node.right);
    }
  }
}

InfoGainTree InfoGainTree::load(ByteReader& r) {
  InfoGainTree tree;
  auto n = r.u64();
  tree.nodes_.resize(n);
  for (auto& node : tree.nodes_) {
    node.leaf = r.u8() != 0;
    if (node.leaf) {
      node.distribution = r.vector();
    } else {
      node.feature = r.i32();
      node.threshold = r.f64();
      node.left = r.i32();
      node.right = r.i32();
    }
  }
  return tree;
}

}  // namespace hc2
