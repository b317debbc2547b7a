#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "expmath/core/polynomial.hpp"
#include "expmath/guess/ansatz.hpp"

namespace expmath::quicksort {

enum class Kind {
  NullaComparisons,
  SwapI,
  SwapII,
  SwapIII,
  SwapIV,
  SwapV,
  DualComparisons,
  DualSwaps,
  ThreePivotComparisons,
  KPivotLinear,
};

struct Variant {
  Kind kind = Kind::NullaComparisons;
  int k = 1;  // pivot count, KPivotLinear only
  friend bool operator==(const Variant&, const Variant&) = default;
};

// "nulla", "swap1".."swap5", "dual", "dualswaps", "threepivot", "kpivot:K"
Variant parse_variant(const std::string& name);
std::string variant_name(const Variant& v);

// coefficients of w^0..w^order where t = 1 + w
struct TruncatedSeries {
  int order = 0;
  std::vector<Rational> coeffs;
};

QPoly pgf(const Variant& v, long n);
QPoly per_prob(long n, long k, long i);
QPoly ip_prob(long n, long k);
std::vector<Rational> pivot_dist_v5(long n);

struct MomentTable {
  Rational mean;
  std::vector<Rational> central;  // central[j] = E[(X - mean)^j], j = 0..r (central[1] = 0)
  Rational variance() const { return central.size() > 2 ? central[2] : Rational(0); }
};

MomentTable moments_from_pgf(const QPoly& p, int r);
TruncatedSeries truncated_moments(const Variant& v, long n, int r);
std::vector<Rational> factorial_moments(const TruncatedSeries& s);  // f_1..f_r

Integer stirling2(int n, int k);
// raws[j-1] = E[X^j] from f[j-1] = E[(X)_j]
std::vector<Rational> stirling_raw_from_factorial(const std::vector<Rational>& f);
// E[(X - mean)^j] for j = 0..r from raw moments E[X^1..X^r]
std::vector<Rational> central_from_raw(const std::vector<Rational>& raws, const Rational& mean);

// Central moments of order 1..r at n via the truncated engine.
MomentTable moments(const Variant& v, long n, int r);
// mean for n = 1..N
std::vector<Rational> mean_sequence(const Variant& v, long N);
// m_r / m_2^{r/2} for r = 3..rmax
std::vector<double> scaled_moments(const Variant& v, long n, int rmax);

struct MomentFit {
  AnsatzBasis basis;
  std::vector<Rational> coeffs;
  long n0 = 1;  // first n the formula holds from
};
// Fit the r-th central moment (r = 1: mean) on n = 1..n_max, scanning the skip count.
MomentFit fit_moment(const Variant& v, int r, const AnsatzBasis& basis, long n_max);

struct MCConfig {
  long n = 10;
  int k = 3;
  long trials = 1000;
  std::uint64_t seed = 1;
};
struct MCResult {
  double mean;
  double variance;
  double std_error;
};
MCResult mc_run(const MCConfig& cfg);
MCResult mc_run_serial(const MCConfig& cfg);
// comparison count of one run on a shuffled 0..n-1, trial stream `trial`
std::uint64_t mc_trial(const MCConfig& cfg, std::uint64_t trial);

}  // namespace expmath::quicksort
