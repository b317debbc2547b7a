#pragma once

#include <optional>
#include <vector>

#include "expmath/linalg/matrix.hpp"

namespace expmath {

enum class SolveStatus { Unique, NoSolution, Underdetermined };

template <class F>
struct SolveResult {
  SolveStatus status;
  std::vector<F> x;        // the solution, or a witness (free variables set to 0)
  std::size_t free_dims;   // kernel dimension
};

// In-place reduced row echelon form; returns pivot column of each pivot row.
template <class F>
std::vector<std::size_t> rref(Matrix<F>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && is_zero(m(p, col))) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    F inv = F(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j)
      if (!is_zero(m(row, j))) m(row, j) = m(row, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || is_zero(m(i, col))) continue;
      F f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j)
        if (!is_zero(m(row, j))) m(i, j) = m(i, j) - f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class F>
SolveResult<F> solve_linear(const Matrix<F>& a, const std::vector<F>& b) {
  if (b.size() != a.rows()) throw DimensionError("solve_linear: rhs length mismatch");
  const std::size_t n = a.cols();
  Matrix<F> aug(a.rows(), n + 1);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n) = b[i];
  }
  auto piv = rref(aug, n);
  for (std::size_t i = piv.size(); i < aug.rows(); ++i)
    if (!is_zero(aug(i, n))) return {SolveStatus::NoSolution, {}, 0};
  std::vector<F> x(n, F(0));
  for (std::size_t r = 0; r < piv.size(); ++r) x[piv[r]] = aug(r, n);
  std::size_t free = n - piv.size();
  return {free == 0 ? SolveStatus::Unique : SolveStatus::Underdetermined, std::move(x), free};
}

// Right-kernel basis; one vector per free column (that entry 1), ordered by column.
template <class F>
std::vector<std::vector<F>> nullspace_basis(const Matrix<F>& a) {
  Matrix<F> m = a;
  const std::size_t n = a.cols();
  auto piv = rref(m, n);
  std::vector<bool> is_piv(n, false);
  for (auto p : piv) is_piv[p] = true;
  std::vector<std::vector<F>> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_piv[f]) continue;
    std::vector<F> v(n, F(0));
    v[f] = F(1);
    for (std::size_t r = 0; r < piv.size(); ++r) v[piv[r]] = -m(r, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace expmath
