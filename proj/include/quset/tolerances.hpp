#pragma once

namespace quset {

// Tolerance for unit-sum and unit-norm checks on vectors. Comfortably above
// double-precision accumulation error for up to ~10^6 cells.
inline constexpr double kNormEps = 1e-9;

// Tolerance for matrix-identity checks (idempotence, Hermiticity,
// orthogonality). Looser than kNormEps because entries accumulate M-term sums.
inline constexpr double kOpEps = 1e-8;

} // namespace quset
