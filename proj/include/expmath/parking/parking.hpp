#pragma once

#include <map>
#include <string>
#include <vector>

#include "expmath/core/polynomial.hpp"
#include "expmath/guess/ansatz.hpp"

namespace expmath::parking {

using ParkingFunction = std::vector<long>;
// Coefficient of x^s counts a-parking functions with statistic value s.
using StatPoly = Polynomial<Integer>;

struct LabeledForest {
  std::size_t a = 0;                // roots are 1..a
  std::size_t n = 0;                // non-roots are a+1..a+n
  std::map<std::size_t, std::size_t> parent;
  friend bool operator==(const LabeledForest&, const LabeledForest&) = default;
};

bool is_a_parking(const ParkingFunction& p, long a);
Integer count_parking(long n, long a);
std::vector<ParkingFunction> enumerate_parking(long n, long a);

StatPoly sum_gf(long n, long a);
StatPoly area_gf(long n, long a);

// Closed forms: E_sum(n,a) and W_n; E_area derived from E_sum.
Rational expectation_sum(long n, long a);
Rational expectation_area(long n, long a);
Rational w_value(long n);

// k-th derivative of area_gf at 1 over the count.
Rational factorial_moment(int k, long n, long a);

struct MomentFit {
  AnsatzBasis basis;
  std::vector<Rational> coeffs;
  std::string formula() const { return format_fit(basis, coeffs); }
  Rational eval(long n, long a) const { return basis.eval(coeffs, AnsatzPoint{n, a}); }
};

// E_k = A_k(n,a) + B_k(n,a) E_1(n,a) by undetermined coefficients over the grid.
MomentFit fit_moment_expression(int k, std::vector<long> a_values, long n_lo, long n_hi);

LabeledForest parking_to_forest(const ParkingFunction& p, std::size_t a);
ParkingFunction forest_to_parking(const LabeledForest& f);

struct HistogramRow {
  long area;
  Integer count;
};
struct ScaledRow {
  double z;
  double density;
};
struct Distribution {
  std::vector<HistogramRow> rows;
  std::vector<ScaledRow> scaled;
  Rational mean;
  Rational variance;
};
Distribution distribution_export(long n, long a);
std::string distribution_csv(const Distribution& d, bool scaled);

}  // namespace expmath::parking
