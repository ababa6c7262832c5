#pragma once

#include <cstdint>
#include <cstring>
#include <stdexcept>
#include <string>
#include <vector>

#include "hc2/types.hpp"

namespace hc2 {

/// Little-endian byte sink for model and checkpoint payloads. Doubles are
/// stored as IEEE-754 bit patterns so a round trip is exact.
class ByteWriter {
 public:
  void u8(std::uint8_t v) { bytes_.push_back(v); }
  void u32(std::uint32_t v) { raw(&v, 4); }
  void u64(std::uint64_t v) { raw(&v, 8); }
  void i32(std::int32_t v) { raw(&v, 4); }
  void i64(std::int64_t v) { raw(&v, 8); }
  void f64(double v) { raw(&v, 8); }

  void str(const std::string& s) {
    u64(s.size());
    bytes_.insert(bytes_.end(), s.begin(), s.end());
  }

  void vec_f64(const std::vector<double>& v) {
    u64(v.size());
    for (double x : v) f64(x);
  }

  void vec_i32(const std::vector<int>& v) {
    u64(v.size());
    for (int x : v) i32(x);
  }

  void vector(const Vector& v) {
    u64(static_cast<std::uint64_t>(v.size()));
    for (Index i = 0; i < v.size(); ++i) f64(v[i]);
  }

  void matrix(const Matrix& m) {
    u64(static_cast<std::uint64_t>(m.rows()));
    u64(static_cast<std::uint64_t>(m.cols()));
    for (Index c = 0; c < m.cols(); ++c)
      for (Index r = 0; r < m.rows(); ++r) f64(m(r, c));
  }

  void bytes(const std::vector<std::uint8_t>& b) {
    u64(b.size());
    bytes_.insert(bytes_.end(), b.begin(), b.end());
  }

  const std::vector<std::uint8_t>& data() const { return bytes_; }
  std::vector<std::uint8_t> take() { return std::move(bytes_); }

 private:
  void raw(const void* p, std::size_t n) {
    const auto* b = static_cast<const std::uint8_t*>(p);
    bytes_.insert(bytes_.end(), b, b + n);
  }
  std::vector<std::uint8_t> bytes_;
};

class ByteReader {
 public:
  explicit ByteReader(const std::vector<std::uint8_t>& bytes) : bytes_(bytes) {}

  std::uint8_t u8() { return bytes_[need(1)]; }
  std::uint32_t u32() { std::uint32_t v; raw(&v, 4); return v; }
  std::uint64_t u64() { std::uint64_t v; raw(&v, 8); return v; }
  std::int32_t i32() { std::int32_t v; raw(&v, 4); return v; }
  std::int64_t i64() { std::int64_t v; raw(&v, 8); return v; }
  double f64() { double v; raw(&v, 8); return v; }

  std::string str() {
    std::size_t n = checked_size(u64());
    std::size_t at = need(n);
    return std::string(bytes_.begin() + static_cast<std::ptrdiff_t>(at),
                       bytes_.begin() + static_cast<std::ptrdiff_t>(at + n));
  }

  std::vector<double> vec_f64() {
    std::size_t n = checked_size(u64());
    std::vector<double> v(n);
    for (auto& x : v) x = f64();
    return v;
  }

  std::vector<int> vec_i32() {
    std::size_t n = checked_size(u64());
    std::vector<int> v(n);
    for (auto& x : v) x = i32();
    return v;
  }

  Vector vector() {
    auto n = static_cast<Index>(checked_size(u64()));
    Vector v(n);
    for (Index i = 0; i < n; ++i) v[i] = f64();
    return v;
  }

  Matrix matrix() {
    auto rows = static_cast<Index>(checked_size(u64()));
    auto cols = static_cast<Index>(checked_size(u64()));
    Matrix m(rows, cols);
    for (Index c = 0; c < cols; ++c)
      for (Index r = 0; r < rows; ++r) m(r, c) = f64();
    return m;
  }

  std::vector<std::uint8_t> bytes() {
    std::size_t n = checked_size(u64());
    std::size_t at = need(n);
    return std::vector<std::uint8_t>(
        bytes_.begin() + static_cast<std::ptrdiff_t>(at),
        bytes_.begin() + static_cast<std::ptrdiff_t>(at + n));
  }

  bool exhausted() const { return pos_ == bytes_.size(); }

 private:
  std::size_t need(std::size_t n) {
    if (pos_ + n > bytes_.size()) throw Hc2Error("serialized payload truncated");
    std::size_t at = pos_;
    pos_ += n;
    return at;
  }
  std::size_t checked_size(std::uint64_t n) {
    if (n > bytes_.size()) throw Hc2Error("serialized payload corrupt: bad length");
    return static_cast<std::size_t>(n);
  }
  void raw(void* p, std::size_t n) { std::memcpy(p, bytes_.data() + need(n), n); }

  const std::vector<std::uint8_t>& bytes_;
  std::size_t pos_ = 0;
};

}  // namespace hc2
