#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace hc2 {

template <class Scalar_>
using mat_type = Eigen::Matrix<Scalar_, Eigen::Dynamic, Eigen::Dynamic>;

template <class Scalar_>
using vec_type = Eigen::Matrix<Scalar_, Eigen::Dynamic, 1>;

using Scalar = double;
using Matrix = mat_type<Scalar>;
using Vector = vec_type<Scalar>;
using IntVector = vec_type<int>;
using Index = Eigen::Index;

/// Domain error raised by any hc2 component; the controller catches these
/// per component and degrades gracefully.
class Hc2Error : public std::runtime_error {
 public:
  explicit Hc2Error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hc2
