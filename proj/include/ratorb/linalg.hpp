// SPDX-License-Identifier: Apache-2.0
// Small exact linear algebra over the rationals: reduced row echelon form
// and nullspace bases for the composition/right-factor solvers.
#pragma once

#include <optional>
#include <vector>

#include "rational.hpp"

namespace ratorb {

using RatMatrix = std::vector<std::vector<Rat>>;

// In-place RREF; returns pivot column indices.
inline std::vector<int> rref(RatMatrix& m) {
  std::vector<int> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t pr = r;
    while (pr < rows && m[pr][c] == 0) ++pr;
    if (pr == rows) continue;
    std::swap(m[r], m[pr]);
    Rat inv = 1 / m[r][c];
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0) continue;
      Rat f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(static_cast<int>(c));
    ++r;
  }
  return pivots;
}

// Basis of the right nullspace of m (vectors of length cols).
inline std::vector<std::vector<Rat>> nullspace(RatMatrix m) {
  std::vector<std::vector<Rat>> basis;
  if (m.empty()) return basis;
  size_t cols = m[0].size();
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  for (size_t fc = 0; fc < cols; ++fc) {
    if (is_pivot[fc]) continue;
    std::vector<Rat> v(cols, rat(0));
    v[fc] = rat(1);
    for (size_t pi = 0; pi < pivots.size(); ++pi) {
      size_t pc = static_cast<size_t>(pivots[pi]);
      v[pc] = -m[pi][fc];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

// Unique solution of m x = b when it exists.
inline std::optional<std::vector<Rat>> solve_unique(RatMatrix m, std::vector<Rat> b) {
  size_t rows = m.size();
  if (rows == 0) return std::vector<Rat>{};
  size_t cols = m[0].size();
  for (size_t i = 0; i < rows; ++i) m[i].push_back(b[i]);
  std::vector<int> pivots = rref(m);
  // inconsistent if a pivot lands in the augmented column
  if (!pivots.empty() && static_cast<size_t>(pivots.back()) == cols) return std::nullopt;
  if (pivots.size() != cols) return std::nullopt;  // underdetermined
  std::vector<Rat> x(cols, rat(0));
  for (size_t pi = 0; pi < pivots.size(); ++pi) x[static_cast<size_t>(pivots[pi])] = m[pi][cols];
  return x;
}

}  // namespace ratorb
