#pragma once

#include "hc2/types.hpp"

namespace hc2 {

/// out[j] = series[j+1] - series[j]; length m-1. Requires m >= 2.
Vector first_order_differences(const Eigen::Ref<const Vector>& series);

/// Magnitudes of DFT coefficients 1..floor(m/2) (zero-frequency excluded).
/// Requires m >= 4.
Vector periodogram(const Eigen::Ref<const Vector>& series);

/// In-place z-normalisation with population standard deviation. Windows with
/// sigma <= 1e-12 are treated as all-zero.
void z_normalise(Vector& values);
Vector z_normalised(const Eigen::Ref<const Vector>& values);

}  // namespace hc2
