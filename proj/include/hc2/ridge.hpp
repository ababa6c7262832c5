#pragma once

#include <vector>

#include "hc2/dataset.hpp"
#include "hc2/serialize.hpp"
#include "hc2/types.hpp"

namespace hc2 {

/// Ridge solution B for (X'X + alpha I) B = X'Y, computed through the SVD of
/// X. Columns of Y are independent targets.
Matrix ridge_solve(const Matrix& x, const Matrix& y, double alpha);

/// One-vs-rest ridge classifier with built-in regularisation selection:
/// features are standardised by train mean/std (zero-variance columns keep
/// scale 1), targets are +-1 per class, and alpha is chosen from a 10-point
/// log grid 1e-3..1e3 by closed-form generalised (leave-one-out) cross
/// validation. Binary problems use a single signed output.
class RidgeClassifier {
 public:
  static RidgeClassifier fit(const Matrix& features, const std::vector<int>& labels,
                             Index n_classes);

  Vector scores(const Eigen::Ref<const Vector>& features) const;
  int predict(const Eigen::Ref<const Vector>& features) const;

  double chosen_alpha() const { return alpha_; }

  void save(ByteWriter& w) const;
  static RidgeClassifier load(ByteReader& r);

 private:
  Index n_classes_ = 0;
  int constant_class_ = -1;  // set when only one class was present
  Vector mean_, scale_;
  Matrix beta_;       // p x outputs
  Vector intercept_;  // outputs
  double alpha_ = 1.0;
};

}  // namespace hc2
