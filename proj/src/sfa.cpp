#include "hc2/sfa.hpp"

#include <algorithm>
#include <cmath>

#include "hc2/catch22.hpp"
#include "hc2/transforms.hpp"

namespace hc2::tde {

Vector sfa_coefficients(const Eigen::Ref<const Vector>& window, int word_length, bool normalise) {
  Index w = window.size();
  int half = word_length / 2;
  int first_freq = normalise ? 1 : 0;
  if (w < half + first_freq)
    throw Hc2Error("sfa_coefficients: window too short for the word length");

  Vector values = normalise ? z_normalised(window) : Vector(window);
  Vector out(word_length);
  double step = 2.0 * M_PI / static_cast<double>(w);
  for (int i = 0; i < half; ++i) {
    int f = first_freq + i;
    double re = 0.0, im = 0.0;
    for (Index j = 0; j < w; ++j) {
      double angle = step * static_cast<double>(f) * static_cast<double>(j);
      re += values[j] * std::cos(angle);
      im -= values[j] * std::sin(angle);
    }
    out[2 * i] = re;
    out[2 * i + 1] = im;
  }
  return out;
}

namespace {

struct ValueLabel {
  double value;
  int label;
};

/// Best binary split of sorted (value, label) pairs by information gain;
/// candidates are midpoints of consecutive distinct values. Returns false
/// when fewer than two distinct values exist.
bool best_ig_split(const std::vector<ValueLabel>& sorted, int n_classes, double& threshold) {
  std::size_t n = sorted.size();
  if (n < 2) return false;
  std::vector<Index> total(static_cast<std::size_t>(n_classes), 0);
  for (const auto& vl : sorted) total[static_cast<std::size_t>(vl.label)]++;
  double parent = entropy_bits(total, static_cast<Index>(n));

  std::vector<Index> left(static_cast<std::size_t>(n_classes), 0);
  std::vector<Index> right = total;
  bool found = false;
  double best_gain = -1.0;
  for (std::size_t i = 0; i + 1 < n; ++i) {
    left[static_cast<std::size_t>(sorted[i].label)]++;
    right[static_cast<std::size_t>(sorted[i].label)]--;
    if (sorted[i + 1].value <= sorted[i].value) continue;
    auto n_left = static_cast<Index>(i + 1);
    auto n_right = static_cast<Index>(n - i - 1);
    double gain = parent - (static_cast<double>(n_left) * entropy_bits(left, n_left) +
                            static_cast<double>(n_right) * entropy_bits(right, n_right)) /
                               static_cast<double>(n);
    if (!found || gain > best_gain) {
      found = true;
      best_gain = gain;
      threshold = (sorted[i].value + sorted[i + 1].value) / 2.0;
    }
  }
  return found;
}

void igb_row(std::vector<ValueLabel> pairs, int n_classes, double* thresholds) {
  std::sort(pairs.begin(), pairs.end(),
            [](const ValueLabel& a, const ValueLabel& b) { return a.value < b.value; });
  double root;
  if (!best_ig_split(pairs, n_classes, root)) {
    // degenerate column: all letters collapse
    double v = pairs.empty() ? 0.0 : pairs.front().value;
    thresholds[0] = thresholds[1] = thresholds[2] = v;
    return;
  }
  auto mid = std::partition_point(pairs.begin(), pairs.end(),
                                  [&](const ValueLabel& vl) { return vl.value < root; });
  std::vector<ValueLabel> lo(pairs.begin(), mid), hi(mid, pairs.end());
  double t_lo = root, t_hi = root;
  best_ig_split(lo, n_classes, t_lo);
  best_ig_split(hi, n_classes, t_hi);
  thresholds[0] = t_lo;
  thresholds[1] = root;
  thresholds[2] = t_hi;
  std::sort(thresholds, thresholds + 3);
}

}  // namespace

Matrix fit_breakpoints(BinningMethod method, const Matrix& coefficient_rows,
                       const std::vector<int>& labels) {
  Index n = coefficient_rows.rows();
  Index l = coefficient_rows.cols();
  if (n < kAlphabetSize) throw Hc2Error("fit_breakpoints: needs at least alphabet-size windows");
  if (method == BinningMethod::IGB && static_cast<Index>(labels.size()) != n)
    throw Hc2Error("fit_breakpoints: IGB needs one label per window");

  int n_classes = 0;
  if (method == BinningMethod::IGB)
    for (int lab : labels) n_classes = std::max(n_classes, lab + 1);

  Matrix breakpoints(l, kAlphabetSize - 1);
  for (Index pos = 0; pos < l; ++pos) {
    if (method == BinningMethod::MCB) {
      std::vector<double> values(static_cast<std::size_t>(n));
      for (Index i = 0; i < n; ++i) values[static_cast<std::size_t>(i)] = coefficient_rows(i, pos);
      std::sort(values.begin(), values.end());
      for (int b = 1; b < kAlphabetSize; ++b) {
        double q = static_cast<double>(b) / kAlphabetSize;
        double h = q * static_cast<double>(n - 1);
        auto k = static_cast<std::size_t>(h);
        double v = k + 1 < values.size()
                       ? values[k] + (h - static_cast<double>(k)) * (values[k + 1] - values[k])
                       : values.back();
        breakpoints(pos, b - 1) = v;
      }
    } else {
      std::vector<ValueLabel> pairs(static_cast<std::size_t>(n));
      for (Index i = 0; i < n; ++i)
        pairs[static_cast<std::size_t>(i)] = {coefficient_rows(i, pos),
                                              labels[static_cast<std::size_t>(i)]};
      double row[3];
      igb_row(std::move(pairs), n_classes, row);
      for (int b = 0; b < 3; ++b) breakpoints(pos, b) = row[b];
    }
  }
  return breakpoints;
}

Word sfa_word(const Eigen::Ref<const Vector>& coefficients, const Matrix& breakpoints) {
  if (coefficients.size() != breakpoints.rows())
    throw Hc2Error("sfa_word: coefficient/breakpoint size mismatch");
  Word word = 0;
  for (Index i = 0; i < coefficients.size(); ++i) {
    unsigned letter = 0;
    for (Index b = 0; b < breakpoints.cols(); ++b)
      if (coefficients[i] >= breakpoints(i, b)) ++letter;
    word |= static_cast<Word>(letter) << (2 * i);
  }
  return word;
}

}  // namespace hc2::tde
