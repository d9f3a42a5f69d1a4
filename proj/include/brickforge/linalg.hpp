#pragma once

// Small dense exact-rational linear algebra: rank, square solves, determinants.
// Dimensions here are tiny (<= rank + |Phi+|), so plain Gaussian elimination
// over cpp_rational is both simple and fast enough.

#include "brickforge/numbers.hpp"

#include <optional>
#include <vector>

namespace brickforge {

// Rank of the row span.
inline std::size_t rational_rank(std::vector<QVec> rows) {
  if (rows.empty()) return 0;
  std::size_t cols = rows[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[rank], rows[piv]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][col] == 0) continue;
      Rat f = rows[r][col] / rows[rank][col];
      for (std::size_t c = col; c < cols; ++c) rows[r][c] -= f * rows[rank][c];
    }
    ++rank;
  }
  return rank;
}

// Solve M x = b for square M; nullopt if singular.
inline std::optional<QVec> solve_square(std::vector<QVec> m, QVec b) {
  std::size_t n = m.size();
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && m[piv][k] == 0) ++piv;
    if (piv == n) return std::nullopt;
    std::swap(m[k], m[piv]);
    std::swap(b[k], b[piv]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k || m[r][k] == 0) continue;
      Rat f = m[r][k] / m[k][k];
      for (std::size_t c = k; c < n; ++c) m[r][c] -= f * m[k][c];
      b[r] -= f * b[k];
    }
  }
  QVec x(n);
  for (std::size_t k = 0; k < n; ++k) x[k] = b[k] / m[k][k];
  return x;
}

}  // namespace brickforge
