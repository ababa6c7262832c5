#include "hc2/catch22.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include <Eigen/Dense>

namespace hc2::catch22 {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

double sample_std(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  if (n < 2) return kNaN;
  double mu = x.mean();
  return std::sqrt((x.array() - mu).square().sum() / static_cast<double>(n - 1));
}

/// Least-squares line y = a + b t over t = 0..n-1; returns (a, b).
std::pair<double, double> linfit_indices(const double* y, Index n) {
  double tbar = static_cast<double>(n - 1) / 2.0;
  double ybar = 0.0;
  for (Index i = 0; i < n; ++i) ybar += y[i];
  ybar /= static_cast<double>(n);
  double num = 0.0, den = 0.0;
  for (Index i = 0; i < n; ++i) {
    double dt = static_cast<double>(i) - tbar;
    num += dt * (y[i] - ybar);
    den += dt * dt;
  }
  double slope = den > 0 ? num / den : 0.0;
  return {ybar - slope * tbar, slope};
}

std::pair<double, double> linfit_xy(const std::vector<double>& xs, const std::vector<double>& ys,
                                    std::size_t lo, std::size_t hi) {
  double xbar = 0.0, ybar = 0.0;
  auto n = static_cast<double>(hi - lo);
  for (std::size_t i = lo; i < hi; ++i) {
    xbar += xs[i];
    ybar += ys[i];
  }
  xbar /= n;
  ybar /= n;
  double num = 0.0, den = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    num += (xs[i] - xbar) * (ys[i] - ybar);
    den += (xs[i] - xbar) * (xs[i] - xbar);
  }
  double slope = den > 0 ? num / den : 0.0;
  return {ybar - slope * xbar, slope};
}

double sse_linfit(const std::vector<double>& xs, const std::vector<double>& ys, std::size_t lo,
                  std::size_t hi) {
  auto [a, b] = linfit_xy(xs, ys, lo, hi);
  double sse = 0.0;
  for (std::size_t i = lo; i < hi; ++i) {
    double r = ys[i] - (a + b * xs[i]);
    sse += r * r;
  }
  return sse;
}

double median_of(std::vector<double> v) {
  if (v.empty()) return kNaN;
  std::sort(v.begin(), v.end());
  std::size_t n = v.size();
  if (n % 2) return v[n / 2];
  return 0.5 * (v[n / 2 - 1] + v[n / 2]);
}

struct Hist {
  std::vector<int> counts;
  std::vector<double> centers;
  double bin_width = 0.0;
};

/// Equal-width histogram over [min, max]; the top edge is inclusive.
Hist histogram(const Eigen::Ref<const Vector>& x, int n_bins) {
  Hist h;
  double lo = x.minCoeff(), hi = x.maxCoeff();
  if (!(hi > lo)) return h;
  h.bin_width = (hi - lo) / n_bins;
  h.counts.assign(static_cast<std::size_t>(n_bins), 0);
  h.centers.resize(static_cast<std::size_t>(n_bins));
  for (int b = 0; b < n_bins; ++b)
    h.centers[static_cast<std::size_t>(b)] = lo + (b + 0.5) * h.bin_width;
  for (Index i = 0; i < x.size(); ++i) {
    int b = static_cast<int>((x[i] - lo) / h.bin_width);
    if (b >= n_bins) b = n_bins - 1;
    if (b < 0) b = 0;
    h.counts[static_cast<std::size_t>(b)]++;
  }
  return h;
}

double histogram_mode(const Eigen::Ref<const Vector>& x, int n_bins) {
  if (x.size() < 1) return kNaN;
  Hist h = histogram(x, n_bins);
  if (h.counts.empty()) return kNaN;
  int best = *std::max_element(h.counts.begin(), h.counts.end());
  double sum = 0.0;
  int hits = 0;
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    if (h.counts[b] == best) {
      sum += h.centers[b];
      ++hits;
    }
  }
  return sum / hits;
}

int longest_run(const std::vector<bool>& bits, bool target) {
  int best = 0, run = 0;
  for (bool b : bits) {
    if (b == target) {
      best = std::max(best, ++run);
    } else {
      run = 0;
    }
  }
  return best;
}

/// One-sided rectangular-window power spectrum on a power-of-two grid.
/// Angular frequencies w_k = 2*pi*k/nfft for k = 0..nfft/2.
struct Spectrum {
  std::vector<double> power;
  double dw = 0.0;
};

Spectrum welch_rect(const Eigen::Ref<const Vector>& x) {
  Spectrum s;
  Index n = x.size();
  if (n < 4) return s;
  Index nfft = 1;
  while (nfft < n) nfft <<= 1;
  double mu = x.mean();
  std::size_t half = static_cast<std::size_t>(nfft / 2) + 1;
  s.power.assign(half, 0.0);
  s.dw = 2.0 * M_PI / static_cast<double>(nfft);
  // Direct DFT; slices are short enough that this stays cheap.
  for (std::size_t k = 0; k < half; ++k) {
    double re = 0.0, im = 0.0;
    double w = s.dw * static_cast<double>(k);
    for (Index t = 0; t < n; ++t) {
      double v = x[t] - mu;
      re += v * std::cos(w * static_cast<double>(t));
      im -= v * std::sin(w * static_cast<double>(t));
    }
    double p = (re * re + im * im) / (static_cast<double>(n) * 2.0 * M_PI);
    if (k != 0 && k + 1 != half) p *= 2.0;
    s.power[k] = p;
  }
  return s;
}

std::vector<int> coarse_grain_3_quantile(const std::vector<double>& values) {
  std::vector<double> sorted(values);
  std::sort(sorted.begin(), sorted.end());
  auto q = [&](double p) {
    double h = p * static_cast<double>(sorted.size() - 1);
    auto k = static_cast<std::size_t>(h);
    if (k + 1 >= sorted.size()) return sorted.back();
    return sorted[k] + (h - static_cast<double>(k)) * (sorted[k + 1] - sorted[k]);
  };
  double q1 = q(1.0 / 3.0), q2 = q(2.0 / 3.0);
  std::vector<int> symbols(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    symbols[i] = values[i] <= q1 ? 0 : (values[i] <= q2 ? 1 : 2);
  return symbols;
}

double fluct_anal_prop_r1(const Eigen::Ref<const Vector>& x, int lag, bool dfa) {
  // Cumulative sum of the (possibly lag-downsampled) series, then fluctuation
  // size per window scale tau; the output is the fraction of log-spaced
  // scales assigned to the first of two straight-line fits.
  std::vector<double> y;
  for (Index i = 0; i < x.size(); i += lag) y.push_back(x[i]);
  std::partial_sum(y.begin(), y.end(), y.begin());
  auto n = static_cast<Index>(y.size());
  if (n / 2 < 5) return 0.0;

  std::vector<Index> taus;
  for (int i = 0; i < 50; ++i) {
    double t = std::exp(std::log(5.0) + (std::log(static_cast<double>(n) / 2.0) - std::log(5.0)) *
                                            static_cast<double>(i) / 49.0);
    auto tau = static_cast<Index>(std::llround(t));
    if (taus.empty() || tau != taus.back()) taus.push_back(tau);
  }
  if (taus.size() < 12) return 0.0;

  std::vector<double> log_tau, log_f;
  for (Index tau : taus) {
    Index n_buffers = n / tau;
    if (n_buffers < 1) continue;
    double total = 0.0;
    for (Index b = 0; b < n_buffers; ++b) {
      const double* seg = y.data() + b * tau;
      auto [a0, a1] = linfit_indices(seg, tau);
      if (dfa) {
        double ss = 0.0;
        for (Index t = 0; t < tau; ++t) {
          double r = seg[t] - (a0 + a1 * static_cast<double>(t));
          ss += r * r;
        }
        total += ss / static_cast<double>(tau);
      } else {
        double lo = std::numeric_limits<double>::infinity(), hi = -lo;
        for (Index t = 0; t < tau; ++t) {
          double r = seg[t] - (a0 + a1 * static_cast<double>(t));
          lo = std::min(lo, r);
          hi = std::max(hi, r);
        }
        total += (hi - lo) * (hi - lo);
      }
    }
    double f = std::sqrt(total / static_cast<double>(n_buffers));
    if (!(f > 0.0) || !std::isfinite(f)) return 0.0;
    log_tau.push_back(std::log(static_cast<double>(tau)));
    log_f.push_back(std::log(f));
  }
  std::size_t ntt = log_tau.size();
  if (ntt < 12) return 0.0;

  constexpr std::size_t kMinSeg = 3;
  double best_sse = std::numeric_limits<double>::infinity();
  std::size_t best_k = kMinSeg;
  for (std::size_t k = kMinSeg; k + kMinSeg <= ntt; ++k) {
    double sse = sse_linfit(log_tau, log_f, 0, k) + sse_linfit(log_tau, log_f, k, ntt);
    if (sse < best_sse - 1e-15) {
      best_sse = sse;
      best_k = k;
    }
  }
  return static_cast<double>(best_k) / static_cast<double>(ntt);
}

double local_mean_tauresrat(const Eigen::Ref<const Vector>& x, int window) {
  Index n = x.size();
  if (n <= window + 1) return kNaN;
  Vector res(n - window);
  for (Index t = window; t < n; ++t) {
    double m = 0.0;
    for (int j = 1; j <= window; ++j) m += x[t - j];
    res[t - window] = x[t] - m / window;
  }
  double tau_res = first_zero_ac(res);
  double tau_x = first_zero_ac(x);
  if (tau_x == 0) return kNaN;
  return tau_res / tau_x;
}

}  // namespace

Vector autocorrelation(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  Vector acf = Vector::Zero(n);
  if (n == 0) return acf;
  acf[0] = 1.0;
  double mu = x.mean();
  double denom = (x.array() - mu).square().sum();
  if (denom <= 0.0) {
    for (Index k = 1; k < n; ++k) acf[k] = kNaN;
    return acf;
  }
  for (Index k = 1; k < n; ++k) {
    double s = 0.0;
    for (Index t = 0; t + k < n; ++t) s += (x[t] - mu) * (x[t + k] - mu);
    acf[k] = s / denom;
  }
  return acf;
}

int first_zero_ac(const Eigen::Ref<const Vector>& x) {
  Vector acf = autocorrelation(x);
  for (Index k = 1; k < acf.size(); ++k)
    if (!(acf[k] > 0.0)) return static_cast<int>(k);
  return static_cast<int>(std::max<Index>(1, acf.size() - 1));
}

double quantile(std::vector<double> values, double q) {
  if (values.empty()) return kNaN;
  std::sort(values.begin(), values.end());
  double h = q * static_cast<double>(values.size() - 1);
  auto k = static_cast<std::size_t>(h);
  if (k + 1 >= values.size()) return values.back();
  return values[k] + (h - static_cast<double>(k)) * (values[k + 1] - values[k]);
}

double histogram_mode_5(const Eigen::Ref<const Vector>& x) { return histogram_mode(x, 5); }

double histogram_mode_10(const Eigen::Ref<const Vector>& x) { return histogram_mode(x, 10); }

double f1ecac(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  if (n < 2) return kNaN;
  Vector acf = autocorrelation(x);
  double thresh = 1.0 / std::exp(1.0);
  for (Index i = 0; i + 1 < n; ++i) {
    if (acf[i + 1] < thresh) {
      // linear interpolation between lags i and i+1
      double denom = acf[i] - acf[i + 1];
      double dx = denom > 0 ? (acf[i] - thresh) / denom : 1.0;
      return static_cast<double>(i) + dx;
    }
  }
  return static_cast<double>(n);
}

double first_min_ac(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  Vector acf = autocorrelation(x);
  for (Index i = 1; i + 1 < n; ++i)
    if (acf[i] < acf[i - 1] && acf[i] < acf[i + 1]) return static_cast<double>(i);
  return static_cast<double>(n);
}

double histogram_ami_even_2_5(const Eigen::Ref<const Vector>& x) {
  constexpr int tau = 2, n_bins = 5;
  Index n = x.size();
  if (n < tau + 2) return kNaN;
  double lo = x.minCoeff() - 0.1, hi = x.maxCoeff() + 0.1;
  double width = (hi - lo) / n_bins;
  Index pairs = n - tau;
  double joint[n_bins][n_bins] = {};
  auto bin_of = [&](double v) {
    int b = static_cast<int>((v - lo) / width);
    return std::clamp(b, 0, n_bins - 1);
  };
  for (Index t = 0; t < pairs; ++t)
    joint[bin_of(x[t])][bin_of(x[t + tau])] += 1.0 / static_cast<double>(pairs);
  double pi[n_bins] = {}, pj[n_bins] = {};
  for (int i = 0; i < n_bins; ++i)
    for (int j = 0; j < n_bins; ++j) {
      pi[i] += joint[i][j];
      pj[j] += joint[i][j];
    }
  double ami = 0.0;
  for (int i = 0; i < n_bins; ++i)
    for (int j = 0; j < n_bins; ++j)
      if (joint[i][j] > 0) ami += joint[i][j] * std::log(joint[i][j] / (pi[i] * pj[j]));
  return ami;
}

double trev_1_num(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  if (n < 2) return kNaN;
  double s = 0.0;
  for (Index t = 0; t + 1 < n; ++t) {
    double d = x[t + 1] - x[t];
    s += d * d * d;
  }
  return s / static_cast<double>(n - 1);
}

double hrv_pnn40(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  if (n < 2) return kNaN;
  int over = 0;
  for (Index t = 0; t + 1 < n; ++t)
    if (std::abs(x[t + 1] - x[t]) > 0.04) ++over;
  return static_cast<double>(over) / static_cast<double>(n - 1);
}

double binary_stats_mean_longstretch1(const Eigen::Ref<const Vector>& x) {
  if (x.size() < 1) return kNaN;
  double mu = x.mean();
  std::vector<bool> bits(static_cast<std::size_t>(x.size()));
  for (Index i = 0; i < x.size(); ++i) bits[static_cast<std::size_t>(i)] = x[i] > mu;
  return longest_run(bits, true);
}

double transition_matrix_3ac_sumdiagcov(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  if (n < 4) return kNaN;
  int tau = std::max(1, first_zero_ac(x));
  std::vector<double> down;
  for (Index i = 0; i < n; i += tau) down.push_back(x[i]);
  if (down.size() < 3) return kNaN;
  auto symbols = coarse_grain_3_quantile(down);
  double t_mat[3][3] = {};
  double total = static_cast<double>(symbols.size() - 1);
  for (std::size_t i = 0; i + 1 < symbols.size(); ++i)
    t_mat[symbols[i]][symbols[i + 1]] += 1.0 / total;
  // trace of the covariance of the matrix columns
  double out = 0.0;
  for (int j = 0; j < 3; ++j) {
    double mean = (t_mat[0][j] + t_mat[1][j] + t_mat[2][j]) / 3.0;
    double var = 0.0;
    for (int i = 0; i < 3; ++i) var += (t_mat[i][j] - mean) * (t_mat[i][j] - mean);
    out += var / 2.0;
  }
  return out;
}

double periodicity_wang_th0_01(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  if (n < 8) return 0.0;
  // Detrend with a two-piece cubic regression spline (single interior knot).
  double knot = static_cast<double>(n - 1) / 2.0;
  Matrix basis(n, 5);
  for (Index t = 0; t < n; ++t) {
    auto td = static_cast<double>(t);
    basis(t, 0) = 1.0;
    basis(t, 1) = td;
    basis(t, 2) = td * td;
    basis(t, 3) = td * td * td;
    double h = std::max(0.0, td - knot);
    basis(t, 4) = h * h * h;
  }
  Vector coeffs = basis.colPivHouseholderQr().solve(x);
  Vector detrended = x - basis * coeffs;

  Vector acf = autocorrelation(detrended);
  Index max_lag = n / 3;
  if (max_lag < 3) return 0.0;

  constexpr double th = 0.01;
  double best_trough = std::numeric_limits<double>::infinity();
  bool seen_trough = false;
  for (Index i = 1; i + 1 <= max_lag; ++i) {
    if (acf[i] < acf[i - 1] && acf[i] < acf[i + 1]) {
      best_trough = std::min(best_trough, acf[i]);
      seen_trough = true;
    } else if (seen_trough && acf[i] > acf[i - 1] && acf[i] > acf[i + 1] && acf[i] > 0 &&
               acf[i] - best_trough >= th) {
      return static_cast<double>(i);
    }
  }
  return 0.0;
}

double embed2_dist_tau_expfit_meandiff(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  if (n < 5) return kNaN;
  int tau = first_zero_ac(x);
  if (tau > static_cast<int>(n / 10)) tau = static_cast<int>(n / 10);
  if (tau < 1) tau = 1;
  Index count = n - tau - 1;
  if (count < 3) return kNaN;
  Vector d(count);
  for (Index i = 0; i < count; ++i) {
    double a = x[i + 1] - x[i];
    double b = x[i + tau + 1] - x[i + tau];
    d[i] = std::sqrt(a * a + b * b);
  }
  double l = d.mean();
  if (!(l > 0.0)) return kNaN;
  double sd = sample_std(d);
  double lo = d.minCoeff(), hi = d.maxCoeff();
  if (!(hi > lo) || !(sd > 0.0)) return kNaN;
  double bin_width = 3.5 * sd / std::cbrt(static_cast<double>(count));
  int n_bins = static_cast<int>(std::ceil((hi - lo) / bin_width));
  if (n_bins < 1) return kNaN;
  Hist h = histogram(d, n_bins);
  double out = 0.0;
  for (std::size_t b = 0; b < h.counts.size(); ++b) {
    double density = h.counts[b] / (static_cast<double>(count) * h.bin_width);
    double expected = std::exp(-h.centers[b] / l) / l;
    out += std::abs(density - expected);
  }
  return out / static_cast<double>(h.counts.size());
}

double ami_gaussian_fmmi(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  if (n < 4) return kNaN;
  auto max_lag = static_cast<Index>(std::min<double>(40.0, std::ceil(static_cast<double>(n) / 2.0)));
  Vector acf = autocorrelation(x);
  max_lag = std::min(max_lag, n - 1);
  if (max_lag < 1) return kNaN;
  Vector ami(max_lag + 1);
  ami[0] = std::numeric_limits<double>::infinity();
  for (Index tau = 1; tau <= max_lag; ++tau) {
    double r2 = acf[tau] * acf[tau];
    ami[tau] = r2 >= 1.0 ? std::numeric_limits<double>::infinity() : -0.5 * std::log(1.0 - r2);
  }
  for (Index tau = 2; tau < max_lag; ++tau)
    if (ami[tau] < ami[tau - 1] && ami[tau] < ami[tau + 1]) return static_cast<double>(tau);
  return static_cast<double>(max_lag);
}

double local_simple_mean1_tauresrat(const Eigen::Ref<const Vector>& x) {
  return local_mean_tauresrat(x, 1);
}

namespace {

double outlier_include_mdrmd(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  if (n < 3) return kNaN;
  constexpr double inc = 0.01;
  double max_val = x.maxCoeff();
  if (max_val < 0.0) return 0.0;
  auto n_thresh = static_cast<Index>(max_val / inc) + 1;

  std::vector<double> gap_pct, rel_median;
  for (Index j = 0; j < n_thresh; ++j) {
    double th = static_cast<double>(j) * inc;
    std::vector<double> times;  // 1-based event positions
    for (Index i = 0; i < n; ++i)
      if (x[i] >= th) times.push_back(static_cast<double>(i + 1));
    if (times.empty()) {
      gap_pct.push_back(0.0);
      rel_median.push_back(kNaN);
      continue;
    }
    gap_pct.push_back(static_cast<double>(times.size() - 1) * 100.0 / static_cast<double>(n - 1));
    rel_median.push_back(median_of(times) / (static_cast<double>(n) / 2.0) - 1.0);
  }

  // keep thresholds up to the last one where > 2% of possible gaps survive
  std::size_t last = 0;
  bool any = false;
  for (std::size_t j = 0; j < gap_pct.size(); ++j) {
    if (gap_pct[j] > 2.0) {
      last = j;
      any = true;
    }
  }
  if (!any) return 0.0;
  std::vector<double> kept;
  for (std::size_t j = 0; j <= last; ++j)
    if (std::isfinite(rel_median[j])) kept.push_back(rel_median[j]);
  if (kept.empty()) return 0.0;
  return median_of(kept);
}

}  // namespace

double outlier_include_p_001_mdrmd(const Eigen::Ref<const Vector>& x) {
  return outlier_include_mdrmd(x);
}

double outlier_include_n_001_mdrmd(const Eigen::Ref<const Vector>& x) {
  Vector neg = -x;
  return outlier_include_mdrmd(neg);
}

double welch_rect_area_5_1(const Eigen::Ref<const Vector>& x) {
  Spectrum s = welch_rect(x);
  if (s.power.empty()) return kNaN;
  auto first_band = static_cast<std::size_t>(
      std::floor(static_cast<double>(s.power.size()) / 5.0));
  if (first_band == 0) first_band = 1;
  double area = 0.0;
  for (std::size_t k = 0; k < first_band; ++k) area += s.power[k] * s.dw;
  return area;
}

double binary_stats_diff_longstretch0(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  if (n < 2) return kNaN;
  std::vector<bool> bits(static_cast<std::size_t>(n - 1));
  for (Index t = 0; t + 1 < n; ++t) bits[static_cast<std::size_t>(t)] = x[t + 1] - x[t] > 0;
  return longest_run(bits, false);
}

double motif_three_quantile_hh(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  if (n < 2) return kNaN;
  std::vector<double> values(x.data(), x.data() + n);
  auto symbols = coarse_grain_3_quantile(values);
  double counts[3][3] = {};
  double total = static_cast<double>(n - 1);
  for (Index t = 0; t + 1 < n; ++t) counts[symbols[static_cast<std::size_t>(t)]]
                                          [symbols[static_cast<std::size_t>(t + 1)]] += 1.0 / total;
  double hh = 0.0;
  for (auto& row : counts)
    for (double p : row)
      if (p > 0) hh -= p * std::log(p);
  return hh;
}

double fluct_anal_rsrangefit_prop_r1(const Eigen::Ref<const Vector>& x) {
  return fluct_anal_prop_r1(x, 1, false);
}

double fluct_anal_dfa_prop_r1(const Eigen::Ref<const Vector>& x) {
  return fluct_anal_prop_r1(x, 3, true);
}

double welch_rect_centroid(const Eigen::Ref<const Vector>& x) {
  Spectrum s = welch_rect(x);
  if (s.power.empty()) return kNaN;
  double total = 0.0;
  for (double p : s.power) total += p;
  if (!(total > 0.0)) return kNaN;
  double cum = 0.0;
  for (std::size_t k = 0; k < s.power.size(); ++k) {
    cum += s.power[k];
    if (cum > total / 2.0) return s.dw * static_cast<double>(k);
  }
  return s.dw * static_cast<double>(s.power.size() - 1);
}

double local_simple_mean3_stderr(const Eigen::Ref<const Vector>& x) {
  Index n = x.size();
  constexpr int window = 3;
  if (n < window + 2) return kNaN;
  Vector res(n - window);
  for (Index t = window; t < n; ++t) {
    double m = (x[t - 1] + x[t - 2] + x[t - 3]) / 3.0;
    res[t - window] = x[t] - m;
  }
  return sample_std(res);
}

namespace {

using FeatureFn = double (*)(const Eigen::Ref<const Vector>&);

struct Entry {
  const char* name;
  FeatureFn fn;
};

constexpr Entry kTable[kCount] = {
    {"DN_HistogramMode_5", histogram_mode_5},
    {"DN_HistogramMode_10", histogram_mode_10},
    {"CO_f1ecac", f1ecac},
    {"CO_FirstMin_ac", first_min_ac},
    {"CO_HistogramAMI_even_2_5", histogram_ami_even_2_5},
    {"CO_trev_1_num", trev_1_num},
    {"MD_hrv_classic_pnn40", hrv_pnn40},
    {"SB_BinaryStats_mean_longstretch1", binary_stats_mean_longstretch1},
    {"SB_TransitionMatrix_3ac_sumdiagcov", transition_matrix_3ac_sumdiagcov},
    {"PD_PeriodicityWang_th0_01", periodicity_wang_th0_01},
    {"CO_Embed2_Dist_tau_d_expfit_meandiff", embed2_dist_tau_expfit_meandiff},
    {"IN_AutoMutualInfoStats_40_gaussian_fmmi", ami_gaussian_fmmi},
    {"FC_LocalSimple_mean1_tauresrat", local_simple_mean1_tauresrat},
    {"DN_OutlierInclude_p_001_mdrmd", outlier_include_p_001_mdrmd},
    {"DN_OutlierInclude_n_001_mdrmd", outlier_include_n_001_mdrmd},
    {"SP_Summaries_welch_rect_area_5_1", welch_rect_area_5_1},
    {"SB_BinaryStats_diff_longstretch0", binary_stats_diff_longstretch0},
    {"SB_MotifThree_quantile_hh", motif_three_quantile_hh},
    {"SC_FluctAnal_2_rsrangefit_50_1_logi_prop_r1", fluct_anal_rsrangefit_prop_r1},
    {"SC_FluctAnal_2_dfa_50_1_3_logi_prop_r1", fluct_anal_dfa_prop_r1},
    {"SP_Summaries_welch_rect_centroid", welch_rect_centroid},
    {"FC_LocalSimple_mean3_stderr", local_simple_mean3_stderr},
};

}  // namespace

double compute(int id, const Eigen::Ref<const Vector>& x) {
  if (id < 0 || id >= kCount) throw Hc2Error("catch22: bad feature id");
  return kTable[id].fn(x);
}

const char* name(int id) {
  if (id < 0 || id >= kCount) throw Hc2Error("catch22: bad feature id");
  return kTable[id].name;
}

}  // namespace hc2::catch22
