#pragma once

#include <optional>
#include <vector>

#include "expmath/core/polynomial.hpp"

namespace expmath {

// sum_{i=0..order} coeff_polys[i](n) * a(n+i) = 0 for n >= valid_from.
struct PRecurrence {
  std::size_t order = 0;
  std::vector<QPoly> coeff_polys;
  long valid_from = 0;
  friend bool operator==(const PRecurrence&, const PRecurrence&) = default;
};

// Search (order, degree) with order + degree <= max_c, order first. `L[j]` is a(start + j).
std::optional<PRecurrence> find_rec(const std::vector<Rational>& L, std::size_t max_c, long start = 0);

// Residual of the operator at n (zero when the relation holds).
Rational apply_recurrence(const PRecurrence& r, const std::vector<Rational>& L, long start, long n);

}  // namespace expmath
