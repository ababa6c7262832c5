#include "hc2/summary_features.hpp"

#include <cmath>
#include <vector>

#include "hc2/catch22.hpp"
#include "hc2/transforms.hpp"

namespace hc2 {

double slice_mean(const Eigen::Ref<const Vector>& s) { return s.mean(); }

double slice_std(const Eigen::Ref<const Vector>& s) {
  double mu = s.mean();
  return std::sqrt((s.array() - mu).square().sum() / static_cast<double>(s.size()));
}

double slice_slope(const Eigen::Ref<const Vector>& s) {
  Index n = s.size();
  double tbar = static_cast<double>(n - 1) / 2.0;
  double ybar = s.mean();
  double num = 0.0, den = 0.0;
  for (Index t = 0; t < n; ++t) {
    double dt = static_cast<double>(t) - tbar;
    num += dt * (s[t] - ybar);
    den += dt * dt;
  }
  return den > 0 ? num / den : 0.0;
}

double slice_median(const Eigen::Ref<const Vector>& s) {
  std::vector<double> v(s.data(), s.data() + s.size());
  return catch22::quantile(std::move(v), 0.5);
}

double slice_iqr(const Eigen::Ref<const Vector>& s) {
  std::vector<double> v(s.data(), s.data() + s.size());
  std::vector<double> v2 = v;
  return catch22::quantile(std::move(v), 0.75) - catch22::quantile(std::move(v2), 0.25);
}

double summary_feature(int feature_id, const Eigen::Ref<const Vector>& slice) {
  if (slice.size() < 3) throw Hc2Error("summary_feature: slice shorter than 3");
  double out;
  switch (feature_id) {
    case 0: out = slice_mean(slice); break;
    case 1: out = slice_std(slice); break;
    case 2: out = slice_slope(slice); break;
    case 3: out = slice_median(slice); break;
    case 4: out = slice_iqr(slice); break;
    case 5: out = slice.minCoeff(); break;
    case 6: out = slice.maxCoeff(); break;
    default: {
      if (feature_id < 7 || feature_id >= kSummaryFeatureCount)
        throw Hc2Error("summary_feature: bad feature id");
      // The canonical features expect standardised input; the seven summary
      // statistics see the raw slice.
      out = catch22::compute(feature_id - 7, z_normalised(slice));
      break;
    }
  }
  return std::isfinite(out) ? out : 0.0;
}

const char* summary_feature_name(int feature_id) {
  static const char* kStats[7] = {"mean", "std", "slope", "median", "iqr", "min", "max"};
  if (feature_id >= 0 && feature_id < 7) return kStats[feature_id];
  return catch22::name(feature_id - 7);
}

}  // namespace hc2
