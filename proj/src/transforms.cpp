#include "hc2/transforms.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include <unsupported/Eigen/FFT>

namespace hc2 {

Vector first_order_differences(const Eigen::Ref<const Vector>& series) {
  Index m = series.size();
  if (m < 2) throw Hc2Error("first_order_differences needs length >= 2");
  return series.tail(m - 1) - series.head(m - 1);
}

Vector periodogram(const Eigen::Ref<const Vector>& series) {
  Index m = series.size();
  if (m < 4) throw Hc2Error("periodogram needs length >= 4");
  std::vector<double> in(series.data(), series.data() + m);
  std::vector<std::complex<double>> spectrum;
  Eigen::FFT<double> fft;
  fft.fwd(spectrum, in);
  Index half = m / 2;
  Vector out(half);
  for (Index f = 1; f <= half; ++f) out[f - 1] = std::abs(spectrum[static_cast<std::size_t>(f)]);
  return out;
}

void z_normalise(Vector& values) {
  Index n = values.size();
  if (n == 0) return;
  double mean = values.mean();
  double var = (values.array() - mean).square().sum() / static_cast<double>(n);
  double sigma = std::sqrt(var);
  if (sigma <= 1e-12) {
    values.setZero();
  } else {
    values = (values.array() - mean) / sigma;
  }
}

Vector z_normalised(const Eigen::Ref<const Vector>& values) {
  Vector v = values;
  z_normalise(v);
  return v;
}

}  // namespace hc2
