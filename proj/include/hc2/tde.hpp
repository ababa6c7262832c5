#pragma once

#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "hc2/budget.hpp"
#include "hc2/dataset.hpp"
#include "hc2/rng.hpp"
#include "hc2/serialize.hpp"
#include "hc2/sfa.hpp"

namespace hc2::tde {

struct TdeParameters {
  int word_length = 16;      // {16,14,12,10,8}
  int window_length = 10;    // {10..m}
  bool normalise = false;
  int pyramid_levels = 1;    // {1,2,3}
  BinningMethod binning = BinningMethod::MCB;

  bool operator==(const TdeParameters&) const = default;
};

/// Full candidate grid for series length m (empty when m < 10).
std::vector<TdeParameters> parameter_pool(Index series_length);

/// Six-component min-max-normalised encoding (l, alpha, w, p, h, b) for the
/// parameter-selection regressor.
Vector encode_parameters(const TdeParameters& p, Index series_length);

/// Sparse histogram key: dimension, pyramid level, spatial bucket and the
/// packed word; bigrams live in their own key space (flag bit + both words).
struct BagKey {
  std::uint64_t hi = 0;
  std::uint64_t lo = 0;
  bool operator==(const BagKey&) const = default;
};

struct BagKeyHash {
  std::size_t operator()(const BagKey& k) const {
    std::uint64_t h = k.hi * 0x9E3779B97F4A7C15ULL;
    h ^= k.lo + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

using WordHistogram = std::unordered_map<BagKey, std::uint32_t, BagKeyHash>;

BagKey unigram_key(int dimension, int level, int bucket, Word word);
BagKey bigram_key(int dimension, Word previous, Word current);

/// Pyramid weight of the level encoded in a key: 2^(level-1).
double key_weight(const BagKey& k);

/// Weighted histogram intersection: sum over shared keys of
/// 2^(level-1) * min(count_a, count_b). Symmetric, non-negative.
double histogram_similarity(const WordHistogram& a, const WordHistogram& b);

/// Word histograms for one case: one bag entry stream per retained
/// dimension. A word is only counted when it differs from the previous
/// window's word in the same dimension; bigrams pair the current word with
/// the non-overlapping word w positions back (univariate, level 1 only).
WordHistogram build_bag(const Matrix& case_values, const std::vector<int>& dimensions,
                        const std::vector<Matrix>& breakpoints, const TdeParameters& params,
                        Index stride, bool allow_bigrams);

/// 1-NN accuracy where each bag is classified against all the others;
/// similarity ties go to the earlier index.
double loocv_accuracy(const std::vector<WordHistogram>& bags, const std::vector<int>& labels);

struct IndividualTde {
  TdeParameters params;
  std::vector<int> retained_dimensions;  // original indices, ascending, <= 20
  std::vector<Matrix> breakpoints;       // per retained dimension, l x (alpha-1)
  std::vector<WordHistogram> train_bags;
  std::vector<int> bag_labels;
  std::vector<int> subsample_indices;    // into the component's train set
  double loocv_acc = 0.0;

  WordHistogram transform(const Matrix& case_values) const;
  int predict_label(const WordHistogram& query) const;

  void save(ByteWriter& w) const;
  static IndividualTde load(ByteReader& r);
};

/// Per-dimension LOOCV accuracies estimated from disjoint-window bags; keeps
/// dimensions within 85% of the best, capped at the top 20.
std::vector<int> select_dimensions(const TimeSeriesDataset& train,
                                   const std::vector<int>& subsample,
                                   const TdeParameters& params);

IndividualTde build_individual_tde(const TimeSeriesDataset& train,
                                   const std::vector<int>& subsample,
                                   const TdeParameters& params);

/// Highest-posterior-mean proposal over the remaining pool, fitted on the
/// (parameters, accuracy) history. Falls back to a uniform draw when the
/// kernel matrix is singular. Requires |history| >= 50.
TdeParameters gp_propose_parameters(
    const std::vector<std::pair<TdeParameters, double>>& history,
    const std::vector<TdeParameters>& remaining, Index series_length, RandomStream& fallback);

struct TdeConfig {
  int max_candidates = 250;  // k
  int ensemble_size = 50;    // s
  std::optional<Millis> contract;
  int threads = 1;
};

class TdeEnsemble {
 public:
  std::vector<IndividualTde> members;
  std::vector<double> weights;  // loocv_acc^4, exactly
  std::vector<std::pair<TdeParameters, double>> parameter_history;
  Index n_classes = 0;

  ClassDistribution predict(const Matrix& case_values) const;

  void save(ByteWriter& w) const;
  static TdeEnsemble load(ByteReader& r);
};

/// Builds up to k candidates on fresh stratified 70% subsamples and retains
/// the s most accurate by LOOCV. `resume_state` continues a checkpointed
/// build; `monitor` observes unit completion for checkpointing/interruption.
TdeEnsemble build_tde(const TimeSeriesDataset& train, const TdeConfig& config,
                      const RandomStream& stream, BuildMonitor* monitor = nullptr,
                      const std::vector<std::uint8_t>* resume_state = nullptr);

struct OobEstimate {
  double accuracy = -1.0;
  bool resubstitution_fallback = false;
  std::vector<std::optional<Vector>> per_case;
};

/// Out-of-bag accuracy from the final ensemble's existing 70% subsamples;
/// no extra model is built. Cases covered by no member are excluded (or, if
/// none are covered at all, resubstitution is used and flagged).
OobEstimate tde_oob_estimate(const TdeEnsemble& ensemble, const TimeSeriesDataset& train);

}  // namespace hc2::tde
