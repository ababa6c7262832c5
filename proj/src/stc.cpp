#include "hc2/stc.hpp"

namespace hc2::stc {

ClassDistribution StcModel::predict(const Matrix& case_values) const {
  return forest.predict(shapelet_transform_row(shapelets, case_values));
}

void StcModel::save(ByteWriter& w) const {
  w.u64(shapelets.size());
  for (const auto& s : shapelets) s.save(w);
  forest.save(w);
  w.i64(n_classes);
}

StcModel StcModel::load(ByteReader& r) {
  StcModel m;
  auto n = r.u64();
  for (std::uint64_t i = 0; i < n; ++i) m.shapelets.push_back(Shapelet::load(r));
  m.forest = RotationForest::load(r);
  m.n_classes = r.i64();
  return m;
}

namespace {

constexpr std::uint8_t kPhaseSearch = 0;
constexpr std::uint8_t kPhaseForest = 1;

/// Wraps a sub-build's partial state into the STC phase envelope.
class PhaseMonitor : public BuildMonitor {
 public:
  PhaseMonitor(BuildMonitor* outer,
               std::function<void(ByteWriter&, const std::function<void(ByteWriter&)>&)> wrap)
      : outer_(outer), wrap_(std::move(wrap)) {}

  void unit_done(const std::function<void(ByteWriter&)>& save_partial) override {
    if (outer_)
      outer_->unit_done([&](ByteWriter& w) { wrap_(w, save_partial); });
  }

 private:
  BuildMonitor* outer_;
  std::function<void(ByteWriter&, const std::function<void(ByteWriter&)>&)> wrap_;
};

void save_shapelets(ByteWriter& w, const std::vector<Shapelet>& shapelets) {
  w.u64(shapelets.size());
  for (const auto& s : shapelets) s.save(w);
}

std::vector<Shapelet> load_shapelets(ByteReader& r) {
  std::vector<Shapelet> out;
  auto n = r.u64();
  for (std::uint64_t i = 0; i < n; ++i) out.push_back(Shapelet::load(r));
  return out;
}

}  // namespace

StcModel build_stc(const TimeSeriesDataset& train, const StcConfig& config,
                   const RandomStream& stream, BuildMonitor* monitor,
                   const std::vector<std::uint8_t>* resume_state) {
  std::uint8_t phase = kPhaseSearch;
  std::vector<Shapelet> shapelets;
  std::vector<std::uint8_t> sub_state;
  bool have_sub_state = false;

  if (resume_state) {
    ByteReader r(*resume_state);
    phase = r.u8();
    if (phase == kPhaseForest) shapelets = load_shapelets(r);
    sub_state = r.bytes();
    have_sub_state = true;
  }

  if (phase == kPhaseSearch) {
    ShapeletSearchConfig search;
    search.time_budget = config.search_time;
    search.max_candidates = config.search_candidates;
    search.threads = config.threads;

    PhaseMonitor search_monitor(monitor, [](ByteWriter& w, const auto& save_partial) {
      w.u8(kPhaseSearch);
      ByteWriter inner;
      save_partial(inner);
      w.bytes(inner.data());
    });
    shapelets = contracted_shapelet_search(train, search, stream.child(0), &search_monitor,
                                           have_sub_state ? &sub_state : nullptr);
    have_sub_state = false;
  }

  Matrix transform = shapelet_transform(shapelets, train);

  RotationForestConfig forest_config;
  forest_config.n_trees = config.rotation_forest_trees;
  forest_config.contract = config.rotation_forest_contract;
  forest_config.threads = config.threads;

  PhaseMonitor forest_monitor(monitor, [&](ByteWriter& w, const auto& save_partial) {
    w.u8(kPhaseForest);
    save_shapelets(w, shapelets);
    ByteWriter inner;
    save_partial(inner);
    w.bytes(inner.data());
  });

  StcModel model;
  model.forest = build_rotation_forest(transform, train.labels(), train.n_classes(),
                                       forest_config, stream.child(1), &forest_monitor,
                                       have_sub_state ? &sub_state : nullptr);
  model.shapelets = std::move(shapelets);
  model.n_classes = train.n_classes();
  return model;
}

}  // namespace hc2::stc
