#pragma once

#include <utility>
#include <vector>

#include "expmath/core/rational_function.hpp"
#include "expmath/linalg/matrix.hpp"

namespace expmath::diagmat {

// Banded Toeplitz family: a_ij = row[j-i] (j >= i) or col[i-j] (i > j), zero elsewhere.
struct DiagSpec {
  std::size_t n = 0;
  std::vector<Rational> row;
  std::vector<Rational> col;

  Rational band(long offset) const;  // entry at column - row = offset
};

enum class Mode { Det, Perm };

Matrix<Rational> build_matrix(const DiagSpec& spec);

std::vector<Rational> det_sequence(const std::vector<Rational>& row, const std::vector<Rational>& col,
                                   std::size_t m, std::size_t n);
std::vector<Rational> det_sequence_serial(const std::vector<Rational>& row, const std::vector<Rational>& col,
                                          std::size_t m, std::size_t n);
// Banded row-by-row DP over used-column masks.
std::vector<Rational> perm_sequence(const std::vector<Rational>& row, const std::vector<Rational>& col,
                                    std::size_t m, std::size_t n);

// Guess on dims m..n, then reconcile with 1 + sum L_i t^i.
QRatFunc gf_family(const std::vector<Rational>& row, const std::vector<Rational>& col, Mode mode,
                   std::size_t m, std::size_t n);

// Minor of the infinite banded matrix: rows from the current top row down,
// columns = `offsets` (relative to the top row, all < k1-1) plus every offset >= k1-1.
struct MinorState {
  std::vector<int> offsets;
  friend auto operator<=>(const MinorState&, const MinorState&) = default;
};

struct Expansion {
  Rational multiplier;
  MinorState child;
};

MinorState root_state(const DiagSpec& spec);
// One cofactor step along the top row; zero entries and dead children are dropped.
std::vector<Expansion> expand_minor(const DiagSpec& spec, const MinorState& s, Mode mode = Mode::Det);
std::vector<MinorState> children_closure(const DiagSpec& spec, Mode mode = Mode::Det);
// Concrete size-m minor of a state (first m columns of its column set).
Matrix<Rational> materialize(const DiagSpec& spec, const MinorState& s, std::size_t m);

QRatFunc gf_symbolic(const std::vector<Rational>& row, const std::vector<Rational>& col, Mode mode);

}  // namespace expmath::diagmat
