#pragma once

namespace conserv {

/// Probability vectors must sum to one within this bound.
inline constexpr double kSumTolerance = 1e-12;

/// Preference / equality comparisons: |difference| <= kCompareTolerance is a tie.
inline constexpr double kCompareTolerance = 1e-9;

/// Fit residuals (segment projection, hull membership slack).
inline constexpr double kFitTolerance = 1e-6;

}  // namespace conserv
