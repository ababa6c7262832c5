#include "hc2/arsenal.hpp"

#include <cmath>

#include "hc2/parallel.hpp"
#include "hc2/resample.hpp"

namespace hc2::arsenal {

Kernel sample_kernel(Index m, Index d, RandomStream& stream) {
  if (m < 8) throw Hc2Error("Arsenal: series length must be >= 8");
  for (;;) {
    Kernel k;
    constexpr int kLengths[] = {7, 9, 11};
    k.length = kLengths[stream.uniform_int(3)];

    if (d == 1) {
      k.dimensions = {0};
    } else {
      double u = stream.uniform(0.0, std::log2(static_cast<double>(d)));
      auto count = static_cast<int>(std::floor(std::pow(2.0, u)));
      count = std::clamp(count, 1, static_cast<int>(d));
      k.dimensions = stream.sample_without_replacement(static_cast<int>(d), count);
    }

    k.weights.resize(static_cast<Index>(k.dimensions.size()), k.length);
    for (Index row = 0; row < k.weights.rows(); ++row) {
      for (Index i = 0; i < k.length; ++i) k.weights(row, i) = stream.normal();
      k.weights.row(row).array() -= k.weights.row(row).mean();
    }

    k.bias = stream.uniform(-1.0, 1.0);

    double max_exp = std::log2(static_cast<double>(m - 1) / static_cast<double>(k.length - 1));
    k.dilation = std::max(1, static_cast<int>(std::floor(
                                 std::pow(2.0, stream.uniform(0.0, std::max(0.0, max_exp))))));

    k.padding = stream.uniform_int(2) == 1 ? ((k.length - 1) * k.dilation) / 2 : 0;

    if (k.output_positions(m) > 0) return k;
    // out-of-range kernels are resampled; the draws above are still consumed
  }
}

std::pair<double, double> apply_kernel(const Kernel& k, const Matrix& case_values) {
  Index m = case_values.cols();
  Index out = k.output_positions(m);
  if (out <= 0) throw Hc2Error("apply_kernel: kernel has no valid output positions");
  double best = -std::numeric_limits<double>::infinity();
  Index positive = 0;
  for (Index g = 0; g < out; ++g) {
    double v = k.bias;
    Index base = g - k.padding;
    for (std::size_t r = 0; r < k.dimensions.size(); ++r) {
      const int dim = k.dimensions[r];
      for (Index i = 0; i < k.length; ++i) {
        Index at = base + i * k.dilation;
        if (at >= 0 && at < m) v += k.weights(static_cast<Index>(r), i) * case_values(dim, at);
      }
    }
    if (v > best) best = v;
    if (v > 0) ++positive;
  }
  return {best, static_cast<double>(positive) / static_cast<double>(out)};
}

Vector rocket_transform_row(const std::vector<Kernel>& kernels, const Matrix& case_values) {
  Vector row(static_cast<Index>(kernels.size()) * 2);
  for (std::size_t j = 0; j < kernels.size(); ++j) {
    auto [mx, ppv] = apply_kernel(kernels[j], case_values);
    row[static_cast<Index>(2 * j)] = mx;
    row[static_cast<Index>(2 * j + 1)] = ppv;
  }
  return row;
}

int RocketMember::predict(const Matrix& case_values) const {
  return ridge.predict(rocket_transform_row(kernels, case_values));
}

void RocketMember::save(ByteWriter& w) const {
  w.u64(kernels.size());
  for (const auto& k : kernels) {
    w.i32(k.length);
    w.vec_i32(k.dimensions);
    w.matrix(k.weights);
    w.f64(k.bias);
    w.i32(k.dilation);
    w.i32(k.padding);
  }
  ridge.save(w);
  w.vec_i32(bag_indices);
}

RocketMember RocketMember::load(ByteReader& r) {
  RocketMember m;
  auto n = r.u64();
  for (std::uint64_t i = 0; i < n; ++i) {
    Kernel k;
    k.length = r.i32();
    k.dimensions = r.vec_i32();
    k.weights = r.matrix();
    k.bias = r.f64();
    k.dilation = r.i32();
    k.padding = r.i32();
    m.kernels.push_back(std::move(k));
  }
  m.ridge = RidgeClassifier::load(r);
  m.bag_indices = r.vec_i32();
  return m;
}

ClassDistribution Arsenal::predict(const Matrix& case_values) const {
  Vector votes = Vector::Zero(n_classes);
  for (const auto& m : members) votes[m.predict(case_values)] += 1.0;
  return ClassDistribution::from_scores(votes);
}

void Arsenal::save(ByteWriter& w) const {
  w.u64(members.size());
  for (const auto& m : members) m.save(w);
  w.i64(n_classes);
}

Arsenal Arsenal::load(ByteReader& r) {
  Arsenal a;
  auto n = r.u64();
  for (std::uint64_t i = 0; i < n; ++i) a.members.push_back(RocketMember::load(r));
  a.n_classes = r.i64();
  return a;
}

namespace {

struct ArsenalBuildState {
  int next_member = 0;
  std::vector<RocketMember> members;

  void save(ByteWriter& w) const {
    w.i32(next_member);
    w.u64(members.size());
    for (const auto& m : members) m.save(w);
  }
  static ArsenalBuildState load(ByteReader& r) {
    ArsenalBuildState s;
    s.next_member = r.i32();
    auto n = r.u64();
    for (std::uint64_t i = 0; i < n; ++i) s.members.push_back(RocketMember::load(r));
    return s;
  }
};

}  // namespace

Arsenal build_arsenal(const TimeSeriesDataset& train, const ArsenalConfig& config,
                      const RandomStream& stream, BuildMonitor* monitor,
                      const std::vector<std::uint8_t>* resume_state) {
  if (train.series_length() < 8) throw Hc2Error("Arsenal: series length must be >= 8");

  ArsenalBuildState state;
  if (resume_state) {
    ByteReader r(*resume_state);
    state = ArsenalBuildState::load(r);
  }

  Index n = train.n_cases();
  std::vector<int> labels = train.labels();

  auto build_one = [&](int i) {
    RandomStream member_stream = stream.child(static_cast<std::uint64_t>(i));
    RandomStream kernel_stream = member_stream.child(0);
    RocketMember member;
    member.kernels.reserve(static_cast<std::size_t>(config.kernels_per_member));
    for (int j = 0; j < config.kernels_per_member; ++j)
      member.kernels.push_back(sample_kernel(train.series_length(), train.n_dimensions(),
                                             kernel_stream));

    std::vector<int> rows;
    if (config.bagging) {
      RandomStream bag_stream = member_stream.child(1);
      member.bag_indices = bootstrap_sample(n, bag_stream);
      rows = member.bag_indices;
    } else {
      rows.resize(static_cast<std::size_t>(n));
      for (Index r = 0; r < n; ++r) rows[static_cast<std::size_t>(r)] = static_cast<int>(r);
    }

    Matrix features(static_cast<Index>(rows.size()), static_cast<Index>(member.kernels.size()) * 2);
    std::vector<int> row_labels(rows.size());
    for (std::size_t t = 0; t < rows.size(); ++t) {
      features.row(static_cast<Index>(t)) =
          rocket_transform_row(member.kernels, train.case_at(rows[t]).values).transpose();
      row_labels[t] = labels[static_cast<std::size_t>(rows[t])];
    }
    member.ridge = RidgeClassifier::fit(features, row_labels, train.n_classes());
    return member;
  };

  UnitScheduler scheduler(config.contract);
  auto checkpoint = [&]() {
    if (monitor)
      monitor->unit_done([&](ByteWriter& w) { state.save(w); });
  };

  if (!config.contract && config.threads > 1 && state.next_member < config.n_members) {
    int first = state.next_member;
    int count = config.n_members - first;
    std::vector<RocketMember> built(static_cast<std::size_t>(count));
    parallel_for(count, config.threads,
                 [&](int t) { built[static_cast<std::size_t>(t)] = build_one(first + t); });
    for (int t = 0; t < count; ++t) {
      state.members.push_back(std::move(built[static_cast<std::size_t>(t)]));
      state.next_member = first + t + 1;
      checkpoint();
    }
  } else {
    int built_this_run = 0;
    while (state.next_member < config.n_members && scheduler.allow_next(built_this_run)) {
      state.members.push_back(build_one(state.next_member));
      state.next_member++;
      built_this_run++;
      checkpoint();
    }
  }

  if (state.members.empty()) throw Hc2Error("Arsenal: no members built");

  Arsenal ensemble;
  ensemble.members = std::move(state.members);
  ensemble.n_classes = train.n_classes();
  return ensemble;
}

}  // namespace hc2::arsenal
