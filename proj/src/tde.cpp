#include "hc2/tde.hpp"

#include <algorithm>
#include <cmath>
#include <iostream>

#include "hc2/gp.hpp"
#include "hc2/parallel.hpp"
#include "hc2/resample.hpp"

namespace hc2::tde {

namespace {

constexpr int kWordLengths[] = {16, 14, 12, 10, 8};
constexpr int kMaxRetainedDimensions = 20;
constexpr double kDimensionThreshold = 0.85;
constexpr int kRandomPhase = 50;  // candidates before the regressor kicks in

double fourth_power(double x) { return x * x * x * x; }

}  // namespace

std::vector<TdeParameters> parameter_pool(Index series_length) {
  std::vector<TdeParameters> pool;
  for (int l : kWordLengths)
    for (Index w = 10; w <= series_length; ++w)
      for (int p = 0; p < 2; ++p)
        for (int h = 1; h <= 3; ++h)
          for (int b = 0; b < 2; ++b)
            pool.push_back(TdeParameters{l, static_cast<int>(w), p == 1, h,
                                         b == 0 ? BinningMethod::MCB : BinningMethod::IGB});
  return pool;
}

Vector encode_parameters(const TdeParameters& p, Index series_length) {
  auto norm = [](double v, double lo, double hi) { return hi > lo ? (v - lo) / (hi - lo) : 0.0; };
  Vector x(6);
  x[0] = norm(p.word_length, 8, 16);
  x[1] = 0.0;  // alphabet size is fixed
  x[2] = norm(p.window_length, 10, static_cast<double>(series_length));
  x[3] = p.normalise ? 1.0 : 0.0;
  x[4] = norm(p.pyramid_levels, 1, 3);
  x[5] = p.binning == BinningMethod::IGB ? 1.0 : 0.0;
  return x;
}

BagKey unigram_key(int dimension, int level, int bucket, Word word) {
  BagKey k;
  k.hi = (static_cast<std::uint64_t>(dimension) << 32) |
         (static_cast<std::uint64_t>(level) << 8) | static_cast<std::uint64_t>(bucket);
  k.lo = word;
  return k;
}

BagKey bigram_key(int dimension, Word previous, Word current) {
  BagKey k;
  k.hi = (1ULL << 63) | (static_cast<std::uint64_t>(dimension) << 32) | (1ULL << 8);
  k.lo = (static_cast<std::uint64_t>(previous) << 32) | current;
  return k;
}

double key_weight(const BagKey& k) {
  auto level = static_cast<int>((k.hi >> 8) & 0x3);
  return static_cast<double>(1 << (level - 1));
}

double histogram_similarity(const WordHistogram& a, const WordHistogram& b) {
  const WordHistogram& small = a.size() <= b.size() ? a : b;
  const WordHistogram& large = a.size() <= b.size() ? b : a;
  double sim = 0.0;
  for (const auto& [key, count] : small) {
    auto it = large.find(key);
    if (it != large.end())
      sim += key_weight(key) * static_cast<double>(std::min(count, it->second));
  }
  return sim;
}

WordHistogram build_bag(const Matrix& case_values, const std::vector<int>& dimensions,
                        const std::vector<Matrix>& breakpoints, const TdeParameters& params,
                        Index stride, bool allow_bigrams) {
  Index m = case_values.cols();
  Index w = params.window_length;
  if (w > m) throw Hc2Error("TDE: window length exceeds series length");
  Index n_positions = m - w + 1;
  bool bigrams = allow_bigrams && stride == 1 && dimensions.size() == 1 &&
                 case_values.rows() == 1;

  WordHistogram bag;
  std::vector<Word> words_at(static_cast<std::size_t>(n_positions), 0);
  for (std::size_t g = 0; g < dimensions.size(); ++g) {
    int dim = dimensions[g];
    bool have_prev = false;
    Word prev_word = 0;
    for (Index j = 0; j < n_positions; j += stride) {
      Vector coeffs = sfa_coefficients(case_values.row(dim).segment(j, w).transpose(),
                                       params.word_length, params.normalise);
      Word word = sfa_word(coeffs, breakpoints[g]);
      if (bigrams) words_at[static_cast<std::size_t>(j)] = word;
      if (!have_prev || word != prev_word) {
        for (int v = 1; v <= params.pyramid_levels; ++v) {
          int buckets = 1 << (v - 1);
          int bucket = static_cast<int>((j * buckets) / n_positions);
          bag[unigram_key(dim, v, bucket, word)]++;
        }
        if (bigrams && j >= w) bag[bigram_key(dim, words_at[static_cast<std::size_t>(j - w)], word)]++;
      }
      have_prev = true;
      prev_word = word;
    }
  }
  return bag;
}

double loocv_accuracy(const std::vector<WordHistogram>& bags, const std::vector<int>& labels) {
  std::size_t n = bags.size();
  if (n < 2) throw Hc2Error("TDE LOOCV needs at least two bags");
  Matrix sim = Matrix::Zero(static_cast<Index>(n), static_cast<Index>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      double s = histogram_similarity(bags[i], bags[j]);
      sim(static_cast<Index>(i), static_cast<Index>(j)) = s;
      sim(static_cast<Index>(j), static_cast<Index>(i)) = s;
    }
  int correct = 0;
  for (std::size_t i = 0; i < n; ++i) {
    int best = -1;
    double best_sim = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == i) continue;
      double s = sim(static_cast<Index>(i), static_cast<Index>(j));
      if (s > best_sim) {
        best_sim = s;
        best = static_cast<int>(j);
      }
    }
    if (labels[static_cast<std::size_t>(best)] == labels[i]) ++correct;
  }
  return static_cast<double>(correct) / static_cast<double>(n);
}

namespace {

/// Sliding (or strided) window coefficients for one (case, dimension),
/// one row per window, plus the window's case label.
Matrix window_coefficients(const Matrix& case_values, int dim, const TdeParameters& params,
                           Index stride) {
  Index m = case_values.cols();
  Index w = params.window_length;
  Index n_positions = m - w + 1;
  Index count = (n_positions + stride - 1) / stride;
  Matrix rows(count, params.word_length);
  Index r = 0;
  for (Index j = 0; j < n_positions; j += stride)
    rows.row(r++) = sfa_coefficients(case_values.row(dim).segment(j, w).transpose(),
                                     params.word_length, params.normalise)
                        .transpose();
  return rows;
}

Matrix fit_dimension_breakpoints(const TimeSeriesDataset& train, const std::vector<int>& subsample,
                                 int dim, const TdeParameters& params, Index stride) {
  std::vector<Matrix> per_case;
  std::vector<int> window_labels;
  Index total = 0;
  for (int idx : subsample) {
    per_case.push_back(window_coefficients(train.case_at(idx).values, dim, params, stride));
    total += per_case.back().rows();
    for (Index r = 0; r < per_case.back().rows(); ++r)
      window_labels.push_back(train.label_of(idx));
  }
  Matrix all(total, params.word_length);
  Index at = 0;
  for (const auto& rows : per_case) {
    all.middleRows(at, rows.rows()) = rows;
    at += rows.rows();
  }
  return fit_breakpoints(params.binning, all, window_labels);
}

}  // namespace

std::vector<int> select_dimensions(const TimeSeriesDataset& train,
                                   const std::vector<int>& subsample,
                                   const TdeParameters& params) {
  Index d = train.n_dimensions();
  if (d == 1) return {0};

  Index stride = params.window_length;  // disjoint windows for the estimate
  std::vector<double> accuracy(static_cast<std::size_t>(d), 0.0);
  std::vector<int> labels;
  for (int idx : subsample) labels.push_back(train.label_of(idx));

  for (Index dim = 0; dim < d; ++dim) {
    Matrix bps = fit_dimension_breakpoints(train, subsample, static_cast<int>(dim), params, stride);
    std::vector<WordHistogram> bags;
    bags.reserve(subsample.size());
    std::vector<int> dims{static_cast<int>(dim)};
    std::vector<Matrix> bp_list{bps};
    for (int idx : subsample)
      bags.push_back(build_bag(train.case_at(idx).values, dims, bp_list, params, stride, false));
    accuracy[static_cast<std::size_t>(dim)] = loocv_accuracy(bags, labels);
  }

  double best = *std::max_element(accuracy.begin(), accuracy.end());
  std::vector<int> order;
  for (Index dim = 0; dim < d; ++dim)
    if (accuracy[static_cast<std::size_t>(dim)] >= kDimensionThreshold * best)
      order.push_back(static_cast<int>(dim));
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return accuracy[static_cast<std::size_t>(a)] > accuracy[static_cast<std::size_t>(b)];
  });
  if (static_cast<int>(order.size()) > kMaxRetainedDimensions)
    order.resize(kMaxRetainedDimensions);
  std::sort(order.begin(), order.end());
  return order;
}

IndividualTde build_individual_tde(const TimeSeriesDataset& train,
                                   const std::vector<int>& subsample,
                                   const TdeParameters& params) {
  if (params.window_length > train.series_length())
    throw Hc2Error("TDE: window length exceeds series length");
  IndividualTde ind;
  ind.params = params;
  ind.subsample_indices = subsample;
  ind.retained_dimensions = select_dimensions(train, subsample, params);

  for (int dim : ind.retained_dimensions)
    ind.breakpoints.push_back(fit_dimension_breakpoints(train, subsample, dim, params, 1));

  bool allow_bigrams = train.n_dimensions() == 1;
  for (int idx : subsample) {
    ind.train_bags.push_back(build_bag(train.case_at(idx).values, ind.retained_dimensions,
                                       ind.breakpoints, params, 1, allow_bigrams));
    ind.bag_labels.push_back(train.label_of(idx));
  }
  ind.loocv_acc = loocv_accuracy(ind.train_bags, ind.bag_labels);
  return ind;
}

WordHistogram IndividualTde::transform(const Matrix& case_values) const {
  bool allow_bigrams = case_values.rows() == 1;
  return build_bag(case_values, retained_dimensions, breakpoints, params, 1, allow_bigrams);
}

int IndividualTde::predict_label(const WordHistogram& query) const {
  int best = 0;
  double best_sim = -1.0;
  for (std::size_t j = 0; j < train_bags.size(); ++j) {
    double s = histogram_similarity(query, train_bags[j]);
    if (s > best_sim) {
      best_sim = s;
      best = static_cast<int>(j);
    }
  }
  return bag_labels[static_cast<std::size_t>(best)];
}

TdeParameters gp_propose_parameters(
    const std::vector<std::pair<TdeParameters, double>>& history,
    const std::vector<TdeParameters>& remaining, Index series_length, RandomStream& fallback) {
  if (history.size() < kRandomPhase)
    throw Hc2Error("gp_propose_parameters: needs >= 50 history entries");
  if (remaining.empty()) throw Hc2Error("gp_propose_parameters: empty pool");

  Matrix inputs(static_cast<Index>(history.size()), 6);
  Vector targets(static_cast<Index>(history.size()));
  for (std::size_t i = 0; i < history.size(); ++i) {
    inputs.row(static_cast<Index>(i)) = encode_parameters(history[i].first, series_length).transpose();
    targets[static_cast<Index>(i)] = history[i].second;
  }
  auto gp = GpRegressor::fit(inputs, targets, 0.01);
  if (!gp) {
    std::cerr << "tde: parameter regressor singular, falling back to a random draw\n";
    return remaining[static_cast<std::size_t>(fallback.uniform_int(remaining.size()))];
  }
  std::size_t best = 0;
  double best_mean = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < remaining.size(); ++i) {
    double mean = gp->posterior_mean(encode_parameters(remaining[i], series_length));
    if (mean > best_mean) {  // ties keep the earlier pool entry
      best_mean = mean;
      best = i;
    }
  }
  return remaining[best];
}

ClassDistribution TdeEnsemble::predict(const Matrix& case_values) const {
  Vector votes = Vector::Zero(n_classes);
  for (std::size_t i = 0; i < members.size(); ++i) {
    int label = members[i].predict_label(members[i].transform(case_values));
    votes[label] += weights[i];
  }
  return ClassDistribution::from_scores(votes);
}

// --- serialization ---------------------------------------------------------

namespace {

void save_params(ByteWriter& w, const TdeParameters& p) {
  w.i32(p.word_length);
  w.i32(p.window_length);
  w.u8(p.normalise ? 1 : 0);
  w.i32(p.pyramid_levels);
  w.u8(static_cast<std::uint8_t>(p.binning));
}

TdeParameters load_params(ByteReader& r) {
  TdeParameters p;
  p.word_length = r.i32();
  p.window_length = r.i32();
  p.normalise = r.u8() != 0;
  p.pyramid_levels = r.i32();
  p.binning = static_cast<BinningMethod>(r.u8());
  return p;
}

void save_bag(ByteWriter& w, const WordHistogram& bag) {
  std::vector<std::pair<BagKey, std::uint32_t>> entries(bag.begin(), bag.end());
  std::sort(entries.begin(), entries.end(), [](const auto& a, const auto& b) {
    return a.first.hi != b.first.hi ? a.first.hi < b.first.hi : a.first.lo < b.first.lo;
  });
  w.u64(entries.size());
  for (const auto& [key, count] : entries) {
    w.u64(key.hi);
    w.u64(key.lo);
    w.u32(count);
  }
}

WordHistogram load_bag(ByteReader& r) {
  WordHistogram bag;
  auto n = r.u64();
  bag.reserve(n);
  for (std::uint64_t i = 0; i < n; ++i) {
    BagKey key;
    key.hi = r.u64();
    key.lo = r.u64();
    bag[key] = r.u32();
  }
  return bag;
}

}  // namespace

void IndividualTde::save(ByteWriter& w) const {
  save_params(w, params);
  w.vec_i32(retained_dimensions);
  for (const auto& bp : breakpoints) w.matrix(bp);
  w.u64(train_bags.size());
  for (const auto& bag : train_bags) save_bag(w, bag);
  w.vec_i32(bag_labels);
  w.vec_i32(subsample_indices);
  w.f64(loocv_acc);
}

IndividualTde IndividualTde::load(ByteReader& r) {
  IndividualTde ind;
  ind.params = load_params(r);
  ind.retained_dimensions = r.vec_i32();
  for (std::size_t i = 0; i < ind.retained_dimensions.size(); ++i)
    ind.breakpoints.push_back(r.matrix());
  auto n = r.u64();
  for (std::uint64_t i = 0; i < n; ++i) ind.train_bags.push_back(load_bag(r));
  ind.bag_labels = r.vec_i32();
  ind.subsample_indices = r.vec_i32();
  ind.loocv_acc = r.f64();
  return ind;
}

void TdeEnsemble::save(ByteWriter& w) const {
  w.u64(members.size());
  for (const auto& m : members) m.save(w);
  w.vec_f64(weights);
  w.u64(parameter_history.size());
  for (const auto& [p, acc] : parameter_history) {
    save_params(w, p);
    w.f64(acc);
  }
  w.i64(n_classes);
}

TdeEnsemble TdeEnsemble::load(ByteReader& r) {
  TdeEnsemble e;
  auto n = r.u64();
  for (std::uint64_t i = 0; i < n; ++i) e.members.push_back(IndividualTde::load(r));
  e.weights = r.vec_f64();
  auto h = r.u64();
  for (std::uint64_t i = 0; i < h; ++i) {
    TdeParameters p = load_params(r);
    double acc = r.f64();
    e.parameter_history.emplace_back(p, acc);
  }
  e.n_classes = r.i64();
  return e;
}

// --- ensemble build --------------------------------------------------------

namespace {

/// Resumable builder state; candidate i draws from stream.child(i), so
/// resuming at next_candidate reproduces the uninterrupted build exactly.
struct TdeBuildState {
  int next_candidate = 0;
  std::vector<int> drawn_pool_ids;
  std::vector<IndividualTde> members;
  std::vector<double> member_accs;
  std::vector<std::pair<TdeParameters, double>> history;

  void save(ByteWriter& w) const {
    w.i32(next_candidate);
    w.vec_i32(drawn_pool_ids);
    w.u64(members.size());
    for (const auto& m : members) m.save(w);
    w.vec_f64(member_accs);
    w.u64(history.size());
    for (const auto& [p, acc] : history) {
      save_params(w, p);
      w.f64(acc);
    }
  }

  static TdeBuildState load(ByteReader& r) {
    TdeBuildState s;
    s.next_candidate = r.i32();
    s.drawn_pool_ids = r.vec_i32();
    auto n = r.u64();
    for (std::uint64_t i = 0; i < n; ++i) s.members.push_back(IndividualTde::load(r));
    s.member_accs = r.vec_f64();
    auto h = r.u64();
    for (std::uint64_t i = 0; i < h; ++i) {
      TdeParameters p = load_params(r);
      double acc = r.f64();
      s.history.emplace_back(p, acc);
    }
    return s;
  }
};

void admit_member(TdeBuildState& state, IndividualTde&& ind, int ensemble_size) {
  double acc = ind.loocv_acc;
  if (static_cast<int>(state.members.size()) < ensemble_size) {
    state.members.push_back(std::move(ind));
    state.member_accs.push_back(acc);
    return;
  }
  auto lowest = static_cast<std::size_t>(
      std::min_element(state.member_accs.begin(), state.member_accs.end()) -
      state.member_accs.begin());
  if (acc > state.member_accs[lowest]) {
    state.members[lowest] = std::move(ind);
    state.member_accs[lowest] = acc;
  }
}

int pool_index_of(const std::vector<TdeParameters>& pool, const TdeParameters& p) {
  for (std::size_t i = 0; i < pool.size(); ++i)
    if (pool[i] == p) return static_cast<int>(i);
  throw Hc2Error("TDE: proposed parameters not in pool");
}

}  // namespace

TdeEnsemble build_tde(const TimeSeriesDataset& train, const TdeConfig& config,
                      const RandomStream& stream, BuildMonitor* monitor,
                      const std::vector<std::uint8_t>* resume_state) {
  std::vector<TdeParameters> pool = parameter_pool(train.series_length());
  if (pool.empty())
    throw Hc2Error("TDE: series length " + std::to_string(train.series_length()) +
                   " is below the minimum window length of 10");
  if (train.n_cases() < 2) throw Hc2Error("TDE: needs at least two train cases");

  TdeBuildState state;
  if (resume_state) {
    ByteReader r(*resume_state);
    state = TdeBuildState::load(r);
  }

  std::vector<bool> drawn(pool.size(), false);
  for (int id : state.drawn_pool_ids) drawn[static_cast<std::size_t>(id)] = true;

  auto remaining_of = [&]() {
    std::vector<TdeParameters> rem;
    std::vector<int> ids;
    for (std::size_t i = 0; i < pool.size(); ++i)
      if (!drawn[i]) {
        rem.push_back(pool[i]);
        ids.push_back(static_cast<int>(i));
      }
    return std::make_pair(rem, ids);
  };

  int k = std::min<int>(config.max_candidates, static_cast<int>(pool.size()));
  UnitScheduler scheduler(config.contract);
  int built_this_run = 0;
  bool out_of_time = false;

  auto checkpoint = [&]() {
    if (monitor)
      monitor->unit_done([&](ByteWriter& w) { state.save(w); });
  };

  auto run_candidate = [&](int i, const TdeParameters& params) {
    RandomStream candidate = stream.child(static_cast<std::uint64_t>(i));
    RandomStream sub_stream = candidate.child(1);
    std::vector<int> subsample = stratified_subsample(train, 0.7, sub_stream);
    return build_individual_tde(train, subsample, params);
  };

  // Phase 1: random parameter draws. Parallel when uncontracted, the fold
  // into the ensemble stays in index order either way.
  int phase1_end = std::min(k, kRandomPhase);
  if (state.next_candidate < phase1_end) {
    std::vector<int> todo;
    std::vector<TdeParameters> picks;
    for (int i = state.next_candidate; i < phase1_end; ++i) {
      auto [rem, ids] = remaining_of();
      if (rem.empty()) break;
      RandomStream pick_stream = stream.child(static_cast<std::uint64_t>(i)).child(0);
      auto at = static_cast<std::size_t>(pick_stream.uniform_int(rem.size()));
      drawn[static_cast<std::size_t>(ids[at])] = true;
      todo.push_back(i);
      picks.push_back(rem[at]);
    }

    if (!config.contract && config.threads > 1) {
      std::vector<IndividualTde> built(todo.size());
      parallel_for(static_cast<int>(todo.size()), config.threads,
                   [&](int t) { built[static_cast<std::size_t>(t)] =
                                    run_candidate(todo[static_cast<std::size_t>(t)],
                                                  picks[static_cast<std::size_t>(t)]); });
      for (std::size_t t = 0; t < todo.size(); ++t) {
        state.drawn_pool_ids.push_back(pool_index_of(pool, picks[t]));
        state.history.emplace_back(picks[t], built[t].loocv_acc);
        admit_member(state, std::move(built[t]), config.ensemble_size);
        state.next_candidate = todo[t] + 1;
        checkpoint();
      }
    } else {
      for (std::size_t t = 0; t < todo.size(); ++t) {
        if (!scheduler.allow_next(built_this_run)) {
          out_of_time = true;
          break;
        }
        IndividualTde ind = run_candidate(todo[t], picks[t]);
        state.drawn_pool_ids.push_back(pool_index_of(pool, picks[t]));
        state.history.emplace_back(picks[t], ind.loocv_acc);
        admit_member(state, std::move(ind), config.ensemble_size);
        state.next_candidate = todo[t] + 1;
        ++built_this_run;
        checkpoint();
      }
    }
  }

  // Phase 2: regressor-guided, inherently sequential.
  while (!out_of_time && state.next_candidate < k && scheduler.allow_next(built_this_run)) {
    auto [rem, ids] = remaining_of();
    if (rem.empty()) break;
    int i = state.next_candidate;
    RandomStream pick_stream = stream.child(static_cast<std::uint64_t>(i)).child(0);
    TdeParameters params =
        gp_propose_parameters(state.history, rem, train.series_length(), pick_stream);
    int pool_id = pool_index_of(pool, params);
    drawn[static_cast<std::size_t>(pool_id)] = true;

    IndividualTde ind = run_candidate(i, params);
    state.drawn_pool_ids.push_back(pool_id);
    state.history.emplace_back(params, ind.loocv_acc);
    admit_member(state, std::move(ind), config.ensemble_size);
    state.next_candidate = i + 1;
    ++built_this_run;
    checkpoint();
  }

  if (state.members.empty()) throw Hc2Error("TDE: no members built");

  TdeEnsemble ensemble;
  ensemble.members = std::move(state.members);
  ensemble.weights.reserve(ensemble.members.size());
  for (const auto& m : ensemble.members) ensemble.weights.push_back(fourth_power(m.loocv_acc));
  ensemble.parameter_history = std::move(state.history);
  ensemble.n_classes = train.n_classes();
  return ensemble;
}

OobEstimate tde_oob_estimate(const TdeEnsemble& ensemble, const TimeSeriesDataset& train) {
  Index n = train.n_cases();
  OobEstimate est;
  est.per_case.resize(static_cast<std::size_t>(n));

  std::vector<std::vector<bool>> in_bag(ensemble.members.size(),
                                        std::vector<bool>(static_cast<std::size_t>(n), false));
  for (std::size_t j = 0; j < ensemble.members.size(); ++j)
    for (int idx : ensemble.members[j].subsample_indices)
      in_bag[j][static_cast<std::size_t>(idx)] = true;

  Index covered = 0, correct = 0;
  for (Index i = 0; i < n; ++i) {
    Vector votes = Vector::Zero(train.n_classes());
    bool any = false;
    for (std::size_t j = 0; j < ensemble.members.size(); ++j) {
      if (in_bag[j][static_cast<std::size_t>(i)]) continue;
      const auto& member = ensemble.members[j];
      int label = member.predict_label(member.transform(train.case_at(i).values));
      votes[label] += ensemble.weights[j];
      any = true;
    }
    if (!any) continue;
    ClassDistribution dist = ClassDistribution::from_scores(votes);
    est.per_case[static_cast<std::size_t>(i)] = dist.probabilities();
    ++covered;
    if (static_cast<int>(dist.predicted_class()) == train.label_of(i)) ++correct;
  }

  if (covered == 0) {
    est.resubstitution_fallback = true;
    Index ok = 0;
    for (Index i = 0; i < n; ++i)
      if (static_cast<int>(ensemble.predict(train.case_at(i).values).predicted_class()) ==
          train.label_of(i))
        ++ok;
    est.accuracy = static_cast<double>(ok) / static_cast<double>(n);
  } else {
    est.accuracy = static_cast<double>(correct) / static_cast<double>(covered);
  }
  return est;
}

}  // namespace hc2::tde
