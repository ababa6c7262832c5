#pragma once

#include <cctype>
#include <chrono>
#include <functional>
#include <optional>
#include <string>

#include "hc2/serialize.hpp"

namespace hc2 {

using Clock = std::chrono::steady_clock;
using Millis = std::chrono::milliseconds;

/// Parses contract strings like "4h", "30m", "90s", "2500ms".
inline Millis parse_contract(const std::string& text) {
  std::size_t pos = 0;
  while (pos < text.size() && (std::isdigit(static_cast<unsigned char>(text[pos])) != 0)) ++pos;
  if (pos == 0 || pos >= text.size())
    throw Hc2Error("bad contract '" + text + "' (expected e.g. 4h, 30m, 90s)");
  long long value = std::stoll(text.substr(0, pos));
  std::string unit = text.substr(pos);
  if (unit == "h") return Millis(value * 3600 * 1000);
  if (unit == "m") return Millis(value * 60 * 1000);
  if (unit == "s") return Millis(value * 1000);
  if (unit == "ms") return Millis(value);
  throw Hc2Error("bad contract unit '" + unit + "' (use h, m, s or ms)");
}

/// Count-extrapolating wall-clock budget. The first unit always runs; after
/// that a unit is admitted only while the running average projects it to
/// finish inside the deadline. Uncontracted schedulers admit everything, so
/// builds stay count-deterministic whenever no deadline is given.
class UnitScheduler {
 public:
  UnitScheduler() = default;
  explicit UnitScheduler(std::optional<Millis> budget) {
    if (budget) deadline_ = Clock::now() + *budget;
  }

  bool allow_next(int units_done) const {
    if (!deadline_) return true;
    if (units_done <= 0) return true;
    auto now = Clock::now();
    auto per_unit = (now - start_) / units_done;
    return now + per_unit <= *deadline_;
  }

  std::optional<Millis> remaining() const {
    if (!deadline_) return std::nullopt;
    auto left = std::chrono::duration_cast<Millis>(*deadline_ - Clock::now());
    return left.count() > 0 ? left : Millis(0);
  }

 private:
  Clock::time_point start_ = Clock::now();
  std::optional<Clock::time_point> deadline_;
};

/// Thrown by a BuildMonitor to abandon a build after checkpointing; used by
/// the checkpoint-equivalence tests to interrupt at scripted points.
struct BuildInterrupted {};

/// Observes unit completion during an ensemble build. `save_partial`
/// serialises the owning builder's resumable state on demand.
class BuildMonitor {
 public:
  virtual ~BuildMonitor() = default;
  virtual void unit_done(const std::function<void(ByteWriter&)>& save_partial) = 0;
};

}  // namespace hc2
