#pragma once

#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "expmath/core/rational.hpp"

namespace expmath {

struct AnsatzPoint {
  long n = 0;
  long a = 0;
};

// n^n_power * a^a_power * prod_k H_k(n)^harmonic[k-1] * opaque(point)^opaque_power
struct AnsatzTerm {
  int n_power = 0;
  int a_power = 0;
  std::vector<int> harmonic;
  int opaque_power = 0;
  std::string label() const;
  friend bool operator==(const AnsatzTerm&, const AnsatzTerm&) = default;
};

struct AnsatzBasis {
  std::vector<AnsatzTerm> terms;
  std::function<Rational(const AnsatzPoint&)> opaque;
  std::string opaque_name = "E";

  Rational eval(const AnsatzTerm& t, const AnsatzPoint& p) const;
  Rational eval(const std::vector<Rational>& coeffs, const AnsatzPoint& p) const;

  // n^i * prod H_k^{e_k} with i <= r+1, sum e_k <= 2, k <= r.
  static AnsatzBasis harmonic_default(int r);
  // Explicit monomials from (n_power, harmonic exponents) pairs.
  static AnsatzBasis from(std::vector<AnsatzTerm> terms);
};

using AnsatzData = std::vector<std::pair<AnsatzPoint, Rational>>;

// Exact fit; the last 3 retained points are held out and must also match.
std::optional<std::vector<Rational>> ansatz_fit(const AnsatzData& data, const AnsatzBasis& basis,
                                                std::size_t skip = 0);

std::string format_fit(const AnsatzBasis& basis, const std::vector<Rational>& coeffs);

}  // namespace expmath
