#pragma once

#include <string>
#include <vector>

#include "hc2/types.hpp"

namespace hc2 {

/// Probability estimate over the dataset's class list, in class-list order.
class ClassDistribution {
 public:
  ClassDistribution() = default;

  /// Validates entries in [0,1] summing to 1 within 1e-9.
  explicit ClassDistribution(Vector probabilities);

  static ClassDistribution uniform(Index n_classes);
  static ClassDistribution one_hot(Index n_classes, Index cls);

  /// Normalises non-negative scores (e.g. vote counts); an all-zero vector
  /// becomes the uniform distribution.
  static ClassDistribution from_scores(const Vector& scores);

  const Vector& probabilities() const { return p_; }
  Index size() const { return p_.size(); }
  double operator[](Index i) const { return p_[i]; }

  /// Argmax with lowest-index tie-break.
  Index predicted_class() const;

 private:
  Vector p_;
};

/// One case: d dimensions by m observations, plus a label index into the
/// dataset's class list.
struct Case {
  Matrix values;  // d x m
  int label = -1;
};

/// [n cases] x [d dimensions] x [m observations] with an ordered class list.
/// Equal-length series only; validated on construction.
class TimeSeriesDataset {
 public:
  TimeSeriesDataset() = default;
  TimeSeriesDataset(std::string name, std::vector<std::string> class_labels,
                    std::vector<Case> cases);

  const std::string& name() const { return name_; }
  const std::vector<std::string>& class_labels() const { return class_labels_; }
  const std::vector<Case>& cases() const { return cases_; }
  const Case& case_at(Index i) const { return cases_[static_cast<std::size_t>(i)]; }

  Index n_cases() const { return static_cast<Index>(cases_.size()); }
  Index n_dimensions() const { return d_; }
  Index series_length() const { return m_; }
  Index n_classes() const { return static_cast<Index>(class_labels_.size()); }

  int label_of(Index i) const { return cases_[static_cast<std::size_t>(i)].label; }
  std::vector<int> labels() const;

  /// Per-class case counts, class-list order.
  std::vector<Index> class_counts() const;

  /// Dataset restricted to the given case indices (order preserved).
  TimeSeriesDataset subset(const std::vector<int>& indices, std::string name = "") const;

  int label_index(const std::string& label) const;  // -1 when unknown

  bool structurally_equal(const TimeSeriesDataset& other) const;

 private:
  std::string name_;
  std::vector<std::string> class_labels_;
  std::vector<Case> cases_;
  Index d_ = 0;
  Index m_ = 0;
};

}  // namespace hc2
