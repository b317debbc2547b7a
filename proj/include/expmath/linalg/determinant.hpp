#pragma once

#include "expmath/linalg/matrix.hpp"

namespace expmath {

// Fraction-free elimination; all divisions are exact in an integral domain.
template <class R>
R determinant_bareiss(Matrix<R> m) {
  if (!m.square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  bool negate = false;
  R prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return R(0);
    if (p != k) {
      m.swap_rows(p, k);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        R v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
        m(i, j) = exact_divide(v, prev);
      }
      m(i, k) = R(0);
    }
    prev = m(k, k);
  }
  R d = m(n - 1, n - 1);
  return negate ? -d : d;
}

// Plain elimination over a field, pivoting on the first nonzero entry.
template <class F>
F determinant_gauss(Matrix<F> m) {
  if (!m.square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  F det(1);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && is_zero(m(p, k))) ++p;
    if (p == n) return F(0);
    if (p != k) {
      m.swap_rows(p, k);
      det = -det;
    }
    det = det * m(k, k);
    F inv = F(1) / m(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (is_zero(m(i, k))) continue;
      F f = m(i, k) * inv;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) = m(i, j) - f * m(k, j);
    }
  }
  return det;
}

template <class R>
R determinant(const Matrix<R>& m) {
  if constexpr (is_field_v<R>) return determinant_gauss(m);
  else return determinant_bareiss(m);
}

// Laplace expansion along the first row; exponential, used as a test oracle.
template <class R>
R determinant_cofactor(const Matrix<R>& m) {
  if (!m.square()) throw DimensionError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  if (n == 1) return m(0, 0);
  R acc(0);
  for (std::size_t j = 0; j < n; ++j) {
    if (is_zero(m(0, j))) continue;
    R t = m(0, j) * determinant_cofactor(m.minor(0, j));
    if (j % 2 == 0) acc = acc + t;
    else acc = acc - t;
  }
  return acc;
}

}  // namespace expmath
