#include "hc2/gp.hpp"

#include <cmath>

#include <Eigen/Cholesky>

namespace hc2 {

namespace {

double se_kernel(const Eigen::Ref<const Vector>& a, const Eigen::Ref<const Vector>& b) {
  return std::exp(-0.5 * (a - b).squaredNorm());
}

}  // namespace

std::optional<GpRegressor> GpRegressor::fit(const Matrix& inputs, const Vector& targets,
                                            double noise_variance) {
  Index n = inputs.rows();
  if (n < 1 || targets.size() != n) return std::nullopt;
  Matrix k(n, n);
  for (Index i = 0; i < n; ++i) {
    for (Index j = 0; j <= i; ++j) {
      double v = se_kernel(inputs.row(i).transpose(), inputs.row(j).transpose());
      k(i, j) = v;
      k(j, i) = v;
    }
    k(i, i) += noise_variance;
  }
  Eigen::LLT<Matrix> llt(k);
  if (llt.info() != Eigen::Success) return std::nullopt;
  GpRegressor gp;
  gp.inputs_ = inputs;
  gp.alpha_ = llt.solve(targets);
  if (!gp.alpha_.allFinite()) return std::nullopt;
  return gp;
}

double GpRegressor::posterior_mean(const Eigen::Ref<const Vector>& x) const {
  double mean = 0.0;
  for (Index i = 0; i < inputs_.rows(); ++i)
    mean += se_kernel(inputs_.row(i).transpose(), x) * alpha_[i];
  return mean;
}

}  // namespace hc2
