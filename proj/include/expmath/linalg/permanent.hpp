#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <vector>

#include "expmath/linalg/matrix.hpp"

namespace expmath {

inline constexpr std::size_t kPermanentCap = 20;

namespace detail {

inline void check_permanent_shape(std::size_t r, std::size_t c) {
  if (r != c) throw DimensionError("permanent of non-square matrix");
  if (r > kPermanentCap)
    throw DimensionError("permanent: dimension " + std::to_string(r) +
                         " exceeds the Ryser cap of 20; truncate the sequence");
}

// Signed Ryser terms for Gray-code indices k in [lo, hi).
template <class R>
R ryser_range(const Matrix<R>& m, std::uint64_t lo, std::uint64_t hi) {
  const std::size_t n = m.rows();
  std::vector<R> rowsum(n, R(0));
  std::uint64_t g = (lo - 1) ^ ((lo - 1) >> 1);
  for (std::size_t j = 0; j < n; ++j)
    if (g >> j & 1u)
      for (std::size_t i = 0; i < n; ++i) rowsum[i] = rowsum[i] + m(i, j);
  R acc(0);
  for (std::uint64_t k = lo; k < hi; ++k) {
    auto j = static_cast<std::size_t>(std::countr_zero(k));
    bool adding = !(g >> j & 1u);
    g ^= std::uint64_t{1} << j;
    for (std::size_t i = 0; i < n; ++i) {
      if (adding) rowsum[i] = rowsum[i] + m(i, j);
      else rowsum[i] = rowsum[i] - m(i, j);
    }
    R prod(1);
    for (std::size_t i = 0; i < n && !is_zero(prod); ++i) prod = prod * rowsum[i];
    if (std::popcount(g) % 2 == 1) acc = acc - prod;
    else acc = acc + prod;
  }
  return acc;
}

template <class R>
R ryser_sign(std::size_t n, const R& s) {
  return n % 2 == 1 ? -s : s;
}

}  // namespace detail

// Ryser inclusion-exclusion over Gray-code ordered column subsets.
template <class R>
R permanent_serial(const Matrix<R>& m) {
  detail::check_permanent_shape(m.rows(), m.cols());
  const std::size_t n = m.rows();
  if (n == 0) return R(1);
  return detail::ryser_sign(n, detail::ryser_range(m, 1, std::uint64_t{1} << n));
}

// Same sum split into fixed chunks across threads; partial sums combined in chunk order.
template <class R>
R permanent(const Matrix<R>& m) {
  detail::check_permanent_shape(m.rows(), m.cols());
  const std::size_t n = m.rows();
  if (n < 12) return permanent_serial(m);
  const std::uint64_t total = std::uint64_t{1} << n;
  const std::int64_t chunks = 64;
  const std::uint64_t step = total / chunks;
  std::vector<R> part(chunks, R(0));
#pragma omp parallel for schedule(dynamic)
  for (std::int64_t c = 0; c < chunks; ++c) {
    std::uint64_t lo = std::max<std::uint64_t>(1, static_cast<std::uint64_t>(c) * step);
    std::uint64_t hi = (c + 1 == chunks) ? total : static_cast<std::uint64_t>(c + 1) * step;
    part[static_cast<std::size_t>(c)] = detail::ryser_range(m, lo, hi);
  }
  R acc(0);
  for (const auto& p : part) acc = acc + p;
  return detail::ryser_sign(n, acc);
}

// Sum over all permutations; test oracle for small n.
template <class R>
R permanent_bruteforce(const Matrix<R>& m) {
  if (!m.square()) throw DimensionError("permanent of non-square matrix");
  std::vector<std::size_t> p(m.rows());
  std::iota(p.begin(), p.end(), 0);
  R acc(0);
  do {
    R prod(1);
    for (std::size_t i = 0; i < p.size(); ++i) prod = prod * m(i, p[i]);
    acc = acc + prod;
  } while (std::next_permutation(p.begin(), p.end()));
  return acc;
}

}  // namespace expmath
