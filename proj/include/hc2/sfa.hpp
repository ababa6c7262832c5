#pragma once

#include <cstdint>
#include <vector>

#include "hc2/types.hpp"

namespace hc2::tde {

enum class BinningMethod : std::uint8_t { MCB = 0, IGB = 1 };

constexpr int kAlphabetSize = 4;

/// Truncated DFT of one window, interleaved (re, im), length = word_length.
/// With normalise the window is z-normalised first, the zero-frequency
/// coefficient dropped and frequencies 1..l/2 used; otherwise frequencies
/// 0..l/2-1. A zero-variance window normalises to all zeros.
Vector sfa_coefficients(const Eigen::Ref<const Vector>& window, int word_length, bool normalise);

/// Breakpoints: word_length rows by alphabet-1 non-decreasing thresholds.
/// MCB: per-position quantiles (linear interpolation) at 1/4, 2/4, 3/4.
/// IGB: recursive binary information-gain splits to depth 2.
/// `coefficient_rows` holds one row per training window.
Matrix fit_breakpoints(BinningMethod method, const Matrix& coefficient_rows,
                       const std::vector<int>& labels);

using Word = std::uint32_t;

/// Letters packed 2 bits each, position i at bit 2i. A value equal to a
/// threshold takes the higher letter.
Word sfa_word(const Eigen::Ref<const Vector>& coefficients, const Matrix& breakpoints);

}  // namespace hc2::tde
