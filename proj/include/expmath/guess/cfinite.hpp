#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "expmath/core/rational_function.hpp"
#include "expmath/linalg/solve.hpp"

namespace expmath {

struct InsufficientData : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// L[n] = sum_{i=1..d} coeffs[i-1] * L[n-i], seeded by `initial`.
template <class F>
struct CFiniteSpec {
  std::vector<F> initial;
  std::vector<F> coeffs;
  std::size_t order() const { return coeffs.size(); }
  friend bool operator==(const CFiniteSpec&, const CFiniteSpec&) = default;
};

// Fit an order-d recurrence to every term of L. With `symmetric`, impose
// coeffs[i] = coeffs[d-i] for 1 <= i < d (palindromic denominators).
template <class F>
std::optional<CFiniteSpec<F>> guess_rec1(const std::vector<F>& L, std::size_t d, bool symmetric = false) {
  if (d == 0) throw std::invalid_argument("guess_rec1: order must be positive");
  if (L.size() < 2 * d + 3)
    throw InsufficientData("guess_rec1: need at least " + std::to_string(2 * d + 3) + " terms, got " +
                           std::to_string(L.size()));
  // unknown index for each coefficient position
  std::vector<std::size_t> slot(d);
  std::size_t unknowns = 0;
  if (symmetric) {
    for (std::size_t i = 1; i < d; ++i) slot[i - 1] = std::min(i, d - i) - 1;
    unknowns = d / 2;
    slot[d - 1] = unknowns++;
  } else {
    for (std::size_t i = 0; i < d; ++i) slot[i] = i;
    unknowns = d;
  }
  const std::size_t eqs = L.size() - d;
  if (symmetric && eqs < unknowns + 3) return std::nullopt;
  Matrix<F> a(eqs, unknowns);
  std::vector<F> b(eqs);
  for (std::size_t e = 0; e < eqs; ++e) {
    std::size_t n = d + e;
    for (std::size_t i = 1; i <= d; ++i) a(e, slot[i - 1]) = a(e, slot[i - 1]) + L[n - i];
    b[e] = L[n];
  }
  auto res = solve_linear(a, b);
  if (res.status != SolveStatus::Unique) return std::nullopt;
  CFiniteSpec<F> s;
  s.initial.assign(L.begin(), L.begin() + static_cast<long>(d));
  for (std::size_t i = 0; i < d; ++i) s.coeffs.push_back(res.x[slot[i]]);
  return s;
}

// Minimal order first: d = 1 .. floor(|L|/2) - 2.
template <class F>
std::optional<CFiniteSpec<F>> guess_rec(const std::vector<F>& L, bool symmetric = false) {
  if (L.size() < 7) throw InsufficientData("guess_rec: need at least 7 terms");
  for (std::size_t d = 1; d + 2 <= L.size() / 2; ++d)
    if (auto s = guess_rec1(L, d, symmetric)) return s;
  return std::nullopt;
}

template <class F>
std::vector<F> seq_from_rec(const CFiniteSpec<F>& s, std::size_t N) {
  std::vector<F> out(s.initial.begin(), s.initial.begin() + static_cast<long>(std::min(N, s.initial.size())));
  const std::size_t d = s.order();
  while (out.size() < N) {
    F acc(0);
    for (std::size_t i = 1; i <= d; ++i) acc = acc + s.coeffs[i - 1] * out[out.size() - i];
    out.push_back(acc);
  }
  return out;
}

// Generating function sum_n L[n] t^(n+offset); verified against the recurrence
// on deg(D)+10 terms, nullopt on mismatch.
template <class F>
std::optional<RationalFunction<F>> c_to_r(const CFiniteSpec<F>& s, std::size_t offset = 0) {
  const std::size_t d = s.order();
  std::vector<F> dc(d + 1, F(0));
  dc[0] = F(1);
  for (std::size_t i = 1; i <= d; ++i) dc[i] = -s.coeffs[i - 1];
  Polynomial<F> D(std::move(dc));
  Polynomial<F> init(s.initial);
  Polynomial<F> N = (D * init).truncate(d);
  RationalFunction<F> f(N.shift(offset), D);
  const std::size_t window = static_cast<std::size_t>(std::max(D.degree(), 0)) + 10;
  auto series = series_coeffs(f, window + offset);
  auto seq = seq_from_rec(s, window);
  for (std::size_t i = 0; i < offset; ++i)
    if (!is_zero(series[i])) return std::nullopt;
  for (std::size_t i = 0; i < window; ++i)
    if (!(series[i + offset] == seq[i])) return std::nullopt;
  return f;
}

}  // namespace expmath
