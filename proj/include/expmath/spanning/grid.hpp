#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "expmath/core/rational_function.hpp"
#include "expmath/spanning/graph.hpp"

namespace expmath::spanning {

struct GridGF {
  std::size_t k = 0;
  QRatFunc gf;
  std::pair<std::size_t, std::size_t> window;  // n range used for guessing
};

// Bivariate rational function in t with coefficients in Q[v].
struct BivariateGF {
  Polynomial<QPoly> numer;
  Polynomial<QPoly> denom;
  // Cross-multiplication equality.
  bool equivalent(const BivariateGF& o) const { return numer * o.denom == o.numer * denom; }
  QRatFunc at_v(const Rational& v) const;
};

// s(k,n) for n in [lo, hi]; the parallel version splits over n.
std::vector<Integer> spanning_counts(std::size_t k, std::size_t lo, std::size_t hi);
std::vector<Integer> spanning_counts_serial(std::size_t k, std::size_t lo, std::size_t hi);

Rational joint_resistance(std::size_t k, std::size_t n);
// C(k) = 2 sum_{j<k} (j/k)^2
Rational doyle_constant(std::size_t k);

GridGF gf_spanning_grid(std::size_t k);
QRatFunc gf_two_forest_grid(std::size_t k);

QPoly vertical_weighted_count(std::size_t k, std::size_t n);
BivariateGF ver_gf(std::size_t k);

}  // namespace expmath::spanning
