#include "hc2/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace hc2 {

namespace {

constexpr std::uint64_t kM0 = 0xD2E7470EE14C6C93ULL;
constexpr std::uint64_t kM1 = 0xCA5A826395121157ULL;
constexpr std::uint64_t kW0 = 0x9E3779B97F4A7C15ULL;
constexpr std::uint64_t kW1 = 0xBB67AE8584CAA73BULL;

inline std::uint64_t mulhilo(std::uint64_t a, std::uint64_t b, std::uint64_t& hi) {
  unsigned __int128 p = static_cast<unsigned __int128>(a) * b;
  hi = static_cast<std::uint64_t>(p >> 64);
  return static_cast<std::uint64_t>(p);
}

}  // namespace

std::array<std::uint64_t, 4> RandomStream::philox4x64(
    const std::array<std::uint64_t, 4>& counter,
    const std::array<std::uint64_t, 2>& key) {
  std::array<std::uint64_t, 4> c = counter;
  std::array<std::uint64_t, 2> k = key;
  for (int round = 0; round < 10; ++round) {
    std::uint64_t hi0, hi1;
    std::uint64_t lo0 = mulhilo(kM0, c[0], hi0);
    std::uint64_t lo1 = mulhilo(kM1, c[2], hi1);
    c = {hi1 ^ c[1] ^ k[0], lo1, hi0 ^ c[3] ^ k[1], lo0};
    k[0] += kW0;
    k[1] += kW1;
  }
  return c;
}

RandomStream::RandomStream(std::uint64_t seed) : key_{seed, 0x48433220ULL} {}

RandomStream::RandomStream(std::uint64_t k0, std::uint64_t k1) : key_{k0, k1} {}

RandomStream RandomStream::child(std::uint64_t i) const {
  // Encrypt the child index under this stream's key; the first two output
  // words become the child key. Distinct i give unrelated keys.
  auto block = philox4x64({i, 0x6368696C64ULL, key_[0], key_[1]}, key_);
  return RandomStream(block[0], block[1]);
}

void RandomStream::refill() {
  buffer_ = philox4x64(counter_, key_);
  buffer_pos_ = 0;
  if (++counter_[0] == 0 && ++counter_[1] == 0 && ++counter_[2] == 0) ++counter_[3];
}

std::uint64_t RandomStream::next_u64() {
  if (buffer_pos_ >= 4) refill();
  return buffer_[buffer_pos_++];
}

std::uint32_t RandomStream::next_u32() {
  return static_cast<std::uint32_t>(next_u64() >> 32);
}

double RandomStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::uint64_t RandomStream::uniform_int(std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_int: bound must be positive");
  unsigned __int128 r = static_cast<unsigned __int128>(next_u64()) * bound;
  return static_cast<std::uint64_t>(r >> 64);
}

double RandomStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

double RandomStream::normal() {
  if (have_spare_normal_) {
    have_spare_normal_ = false;
    return spare_normal_;
  }
  double u, v, s;
  do {
    u = 2.0 * next_double() - 1.0;
    v = 2.0 * next_double() - 1.0;
    s = u * u + v * v;
  } while (s >= 1.0 || s == 0.0);
  double f = std::sqrt(-2.0 * std::log(s) / s);
  spare_normal_ = v * f;
  have_spare_normal_ = true;
  return u * f;
}

std::vector<int> RandomStream::sample_without_replacement(int n, int k) {
  std::vector<int> idx(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) idx[static_cast<std::size_t>(i)] = i;
  if (k > n) k = n;
  for (int i = 0; i < k; ++i) {
    int j = i + static_cast<int>(uniform_int(static_cast<std::uint64_t>(n - i)));
    std::swap(idx[static_cast<std::size_t>(i)], idx[static_cast<std::size_t>(j)]);
  }
  idx.resize(static_cast<std::size_t>(k));
  return idx;
}

}  // namespace hc2
