#pragma once

#include "hc2/types.hpp"

namespace hc2 {

/// Candidate feature pool for the interval forest: ids 0..6 are the seven
/// summary statistics (mean, std, slope, median, iqr, min, max), ids 7..28
/// the 22 canonical features. Any non-finite result is replaced by 0.
constexpr int kSummaryFeatureCount = 29;

double summary_feature(int feature_id, const Eigen::Ref<const Vector>& slice);

const char* summary_feature_name(int feature_id);

// The individual statistics, exposed for tests.
double slice_mean(const Eigen::Ref<const Vector>& s);
double slice_std(const Eigen::Ref<const Vector>& s);    // population
double slice_slope(const Eigen::Ref<const Vector>& s);  // least-squares over 0..l-1
double slice_median(const Eigen::Ref<const Vector>& s);
double slice_iqr(const Eigen::Ref<const Vector>& s);    // linear-interpolation quantiles

}  // namespace hc2
