#pragma once

#include <vector>

#include "hc2/types.hpp"

namespace hc2::catch22 {

// The 22 canonical time-series features. Each function may return NaN on
// degenerate input; callers that need a finite value map non-finite to 0.
// Inputs are used as given; the interval classifier z-scores slices first.

double histogram_mode_5(const Eigen::Ref<const Vector>& x);
double histogram_mode_10(const Eigen::Ref<const Vector>& x);
double f1ecac(const Eigen::Ref<const Vector>& x);
double first_min_ac(const Eigen::Ref<const Vector>& x);
double histogram_ami_even_2_5(const Eigen::Ref<const Vector>& x);
double trev_1_num(const Eigen::Ref<const Vector>& x);
double hrv_pnn40(const Eigen::Ref<const Vector>& x);
double binary_stats_mean_longstretch1(const Eigen::Ref<const Vector>& x);
double transition_matrix_3ac_sumdiagcov(const Eigen::Ref<const Vector>& x);
double periodicity_wang_th0_01(const Eigen::Ref<const Vector>& x);
double embed2_dist_tau_expfit_meandiff(const Eigen::Ref<const Vector>& x);
double ami_gaussian_fmmi(const Eigen::Ref<const Vector>& x);
double local_simple_mean1_tauresrat(const Eigen::Ref<const Vector>& x);
double outlier_include_p_001_mdrmd(const Eigen::Ref<const Vector>& x);
double outlier_include_n_001_mdrmd(const Eigen::Ref<const Vector>& x);
double welch_rect_area_5_1(const Eigen::Ref<const Vector>& x);
double binary_stats_diff_longstretch0(const Eigen::Ref<const Vector>& x);
double motif_three_quantile_hh(const Eigen::Ref<const Vector>& x);
double fluct_anal_rsrangefit_prop_r1(const Eigen::Ref<const Vector>& x);
double fluct_anal_dfa_prop_r1(const Eigen::Ref<const Vector>& x);
double welch_rect_centroid(const Eigen::Ref<const Vector>& x);
double local_simple_mean3_stderr(const Eigen::Ref<const Vector>& x);

constexpr int kCount = 22;

/// Dispatch by stable id in [0, 22).
double compute(int id, const Eigen::Ref<const Vector>& x);
const char* name(int id);

// Shared building blocks, exposed for tests.
Vector autocorrelation(const Eigen::Ref<const Vector>& x);
int first_zero_ac(const Eigen::Ref<const Vector>& x);
double quantile(std::vector<double> sorted_or_not, double q);

}  // namespace hc2::catch22
