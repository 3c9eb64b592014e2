#pragma once

#include <cstddef>
#include <vector>

namespace tubelift::detail {

enum class SolveStatus { kUnique, kRankDeficient, kInconsistent };

template <class F>
struct SolveResult {
  SolveStatus status = SolveStatus::kUnique;
  std::vector<F> x;
};

// Gauss-Jordan elimination over an exact field for a (rows >= cols) system.
// Surplus rows must reduce to 0 = 0.
template <class F>
SolveResult<F> solve_exact(std::vector<std::vector<F>> a, std::vector<F> rhs) {
  SolveResult<F> out;
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a.front().size();
  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols; ++c) {
    std::size_t r = pivot_row;
    while (r < rows && a[r][c].is_zero()) ++r;
    if (r == rows) {
      out.status = SolveStatus::kRankDeficient;
      return out;
    }
    std::swap(a[r], a[pivot_row]);
    std::swap(rhs[r], rhs[pivot_row]);
    const F inv = a[pivot_row][c].inverse();
    for (std::size_t j = c; j < cols; ++j) a[pivot_row][j] *= inv;
    rhs[pivot_row] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == pivot_row || a[i][c].is_zero()) continue;
      const F factor = a[i][c];
      for (std::size_t j = c; j < cols; ++j) a[i][j] -= factor * a[pivot_row][j];
      rhs[i] -= factor * rhs[pivot_row];
    }
    ++pivot_row;
  }
  for (std::size_t i = cols; i < rows; ++i) {
    if (!rhs[i].is_zero()) {
      out.status = SolveStatus::kInconsistent;
      return out;
    }
  }
  out.x.assign(rhs.begin(), rhs.begin() + static_cast<std::ptrdiff_t>(cols));
  return out;
}

}  // namespace tubelift::detail
