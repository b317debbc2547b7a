#pragma once

#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <vector>

#include "expmath/core/ring.hpp"

namespace expmath {

struct DimensionError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Dense row-major matrix over a ring.
template <class R>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), e_(rows * cols, R(0)) {}
  Matrix(std::initializer_list<std::initializer_list<R>> rows) {
    r_ = rows.size();
    c_ = r_ ? rows.begin()->size() : 0;
    for (const auto& row : rows) {
      if (row.size() != c_) throw DimensionError("ragged matrix literal");
      e_.insert(e_.end(), row.begin(), row.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = R(1);
    return m;
  }

  std::size_t rows() const { return r_; }
  std::size_t cols() const { return c_; }
  bool square() const { return r_ == c_; }

  R& operator()(std::size_t i, std::size_t j) { return e_[i * c_ + j]; }
  const R& operator()(std::size_t i, std::size_t j) const { return e_[i * c_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < c_; ++j) std::swap(e_[a * c_ + j], e_[b * c_ + j]);
  }

  // Copy without the listed row and column.
  Matrix minor(std::size_t row, std::size_t col) const {
    Matrix m(r_ - 1, c_ - 1);
    for (std::size_t i = 0, mi = 0; i < r_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, mj = 0; j < c_; ++j) {
        if (j == col) continue;
        m(mi, mj++) = (*this)(i, j);
      }
      ++mi;
    }
    return m;
  }

  template <class Fn>
  auto map(Fn fn) const {
    using S = decltype(fn(e_[0]));
    Matrix<S> m(r_, c_);
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) m(i, j) = fn((*this)(i, j));
    return m;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw DimensionError("matrix product shape mismatch");
    Matrix m(a.r_, b.c_);
    for (std::size_t i = 0; i < a.r_; ++i)
      for (std::size_t k = 0; k < a.c_; ++k) {
        if (is_zero(a(i, k))) continue;
        for (std::size_t j = 0; j < b.c_; ++j) m(i, j) = m(i, j) + a(i, k) * b(k, j);
      }
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.r_ == b.r_ && a.c_ == b.c_ && a.e_ == b.e_;
  }

  std::vector<R> apply(const std::vector<R>& x) const {
    if (x.size() != c_) throw DimensionError("vector length mismatch");
    std::vector<R> y(r_, R(0));
    for (std::size_t i = 0; i < r_; ++i)
      for (std::size_t j = 0; j < c_; ++j) y[i] = y[i] + (*this)(i, j) * x[j];
    return y;
  }

 private:
  std::size_t r_ = 0, c_ = 0;
  std::vector<R> e_;
};

}  // namespace expmath
