#include "hc2/dataset.hpp"

#include <cmath>
#include <set>

namespace hc2 {

ClassDistribution::ClassDistribution(Vector probabilities) : p_(std::move(probabilities)) {
  if (p_.size() < 2) throw Hc2Error("class distribution needs at least two classes");
  double total = 0.0;
  for (Index i = 0; i < p_.size(); ++i) {
    double v = p_[i];
    if (!std::isfinite(v) || v < -1e-12 || v > 1.0 + 1e-12)
      throw Hc2Error("class distribution entry outside [0,1]");
    total += v;
  }
  if (std::abs(total - 1.0) > 1e-9) throw Hc2Error("class distribution does not sum to 1");
}

ClassDistribution ClassDistribution::uniform(Index n_classes) {
  ClassDistribution d;
  d.p_ = Vector::Constant(n_classes, 1.0 / static_cast<double>(n_classes));
  return d;
}

ClassDistribution ClassDistribution::one_hot(Index n_classes, Index cls) {
  ClassDistribution d;
  d.p_ = Vector::Zero(n_classes);
  d.p_[cls] = 1.0;
  return d;
}

ClassDistribution ClassDistribution::from_scores(const Vector& scores) {
  double total = scores.sum();
  if (total <= 0.0) return uniform(scores.size());
  ClassDistribution d;
  d.p_ = scores / total;
  return d;
}

Index ClassDistribution::predicted_class() const {
  Index best = 0;
  for (Index i = 1; i < p_.size(); ++i)
    if (p_[i] > p_[best]) best = i;
  return best;
}

TimeSeriesDataset::TimeSeriesDataset(std::string name, std::vector<std::string> class_labels,
                                     std::vector<Case> cases)
    : name_(std::move(name)), class_labels_(std::move(class_labels)), cases_(std::move(cases)) {
  if (cases_.empty()) throw Hc2Error("dataset '" + name_ + "' has no cases");
  if (class_labels_.size() < 2) throw Hc2Error("dataset '" + name_ + "' needs >= 2 classes");
  std::set<std::string> distinct(class_labels_.begin(), class_labels_.end());
  if (distinct.size() != class_labels_.size())
    throw Hc2Error("dataset '" + name_ + "' has duplicate class labels");

  d_ = cases_.front().values.rows();
  m_ = cases_.front().values.cols();
  if (d_ < 1) throw Hc2Error("dataset '" + name_ + "' needs >= 1 dimension");
  if (m_ < 3) throw Hc2Error("dataset '" + name_ + "' needs series length >= 3");
  for (const auto& c : cases_) {
    if (c.values.rows() != d_ || c.values.cols() != m_)
      throw Hc2Error("dataset '" + name_ + "' mixes case shapes (equal-length only)");
    if (c.label < 0 || c.label >= static_cast<int>(class_labels_.size()))
      throw Hc2Error("dataset '" + name_ + "' has a case with an unknown label");
    if (!c.values.allFinite())
      throw Hc2Error("dataset '" + name_ + "' contains non-finite values");
  }
}

std::vector<int> TimeSeriesDataset::labels() const {
  std::vector<int> out;
  out.reserve(cases_.size());
  for (const auto& c : cases_) out.push_back(c.label);
  return out;
}

std::vector<Index> TimeSeriesDataset::class_counts() const {
  std::vector<Index> counts(class_labels_.size(), 0);
  for (const auto& c : cases_) counts[static_cast<std::size_t>(c.label)]++;
  return counts;
}

TimeSeriesDataset TimeSeriesDataset::subset(const std::vector<int>& indices,
                                            std::string name) const {
  std::vector<Case> picked;
  picked.reserve(indices.size());
  for (int i : indices) {
    if (i < 0 || i >= static_cast<int>(cases_.size()))
      throw Hc2Error("subset index out of range");
    picked.push_back(cases_[static_cast<std::size_t>(i)]);
  }
  return TimeSeriesDataset(name.empty() ? name_ : std::move(name), class_labels_,
                           std::move(picked));
}

int TimeSeriesDataset::label_index(const std::string& label) const {
  for (std::size_t i = 0; i < class_labels_.size(); ++i)
    if (class_labels_[i] == label) return static_cast<int>(i);
  return -1;
}

bool TimeSeriesDataset::structurally_equal(const TimeSeriesDataset& other) const {
  if (name_ != other.name_ || class_labels_ != other.class_labels_) return false;
  if (cases_.size() != other.cases_.size() || d_ != other.d_ || m_ != other.m_) return false;
  for (std::size_t i = 0; i < cases_.size(); ++i) {
    if (cases_[i].label != other.cases_[i].label) return false;
    if (cases_[i].values != other.cases_[i].values) return false;
  }
  return true;
}

}  // namespace hc2
