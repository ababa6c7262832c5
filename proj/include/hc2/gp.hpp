#pragma once

#include <optional>

#include "hc2/types.hpp"

namespace hc2 {

/// Zero-mean Gaussian-process regressor with a squared-exponential kernel,
/// unit length-scale and fixed observation noise. Returns nullopt when the
/// kernel matrix cannot be factorised.
class GpRegressor {
 public:
  static std::optional<GpRegressor> fit(const Matrix& inputs, const Vector& targets,
                                        double noise_variance = 0.01);

  double posterior_mean(const Eigen::Ref<const Vector>& x) const;

 private:
  Matrix inputs_;
  Vector alpha_;
};

}  // namespace hc2
