#pragma once

#include <array>
#include <cstdint>
#include <vector>

namespace hc2 {

/// Counter-based splittable random stream (Philox4x64-10).
///
/// Two properties the ensembles rely on:
///   - identical seeds give identical draw sequences on every platform;
///   - child(i) streams depend only on (parent key, i), so ensemble member i
///     can be built on any thread, in any order, with the same result.
class RandomStream {
 public:
  explicit RandomStream(std::uint64_t seed);

  /// Derives an independent stream from this one. Does not consume draws.
  RandomStream child(std::uint64_t i) const;

  std::uint64_t next_u64();
  std::uint32_t next_u32();

  /// Uniform on [0, 1) with 53 random bits.
  double next_double();

  /// Uniform integer in [0, bound); bound must be positive.
  std::uint64_t uniform_int(std::uint64_t bound);

  double uniform(double lo, double hi);

  /// Standard normal via the polar method.
  double normal();

  /// First k entries of a Fisher-Yates shuffle of 0..n-1.
  std::vector<int> sample_without_replacement(int n, int k);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(uniform_int(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  /// Raw block function, exposed for the known-answer tests.
  static std::array<std::uint64_t, 4> philox4x64(
      const std::array<std::uint64_t, 4>& counter,
      const std::array<std::uint64_t, 2>& key);

 private:
  RandomStream(std::uint64_t k0, std::uint64_t k1);
  void refill();

  std::array<std::uint64_t, 2> key_;
  std::array<std::uint64_t, 4> counter_{0, 0, 0, 0};
  std::array<std::uint64_t, 4> buffer_{};
  int buffer_pos_ = 4;  // empty
  bool have_spare_normal_ = false;
  double spare_normal_ = 0.0;
};

}  // namespace hc2
