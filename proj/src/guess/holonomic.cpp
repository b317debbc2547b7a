#include "expmath/guess/holonomic.hpp"

#include <string>

#include "expmath/guess/cfinite.hpp"
#include "expmath/linalg/solve.hpp"

namespace expmath {

namespace {

constexpr std::size_t kHoldout = 3;

PRecurrence normalize(std::size_t order, std::size_t degree, const std::vector<Rational>& v, long start) {
  // v is laid out as [i*(degree+1) + j] = coefficient of n^j in p_i
  Integer l = 1, g = 0;
  for (const auto& c : v)
    if (!c.is_zero()) l = lcm(l, c.den());
  for (const auto& c : v)
    if (!c.is_zero()) g = gcd(g, c.num() * (l / c.den()));
  Rational s(l, g);
  PRecurrence r;
  r.order = order;
  r.valid_from = start;
  for (std::size_t i = 0; i <= order; ++i) {
    std::vector<Rational> c;
    for (std::size_t j = 0; j <= degree; ++j) c.push_back(v[i * (degree + 1) + j] * s);
    r.coeff_polys.emplace_back(std::move(c));
  }
  if (r.coeff_polys.back().zero() || r.coeff_polys.back().lead().sign() < 0)
    for (auto& p : r.coeff_polys) p = -p;
  return r;
}

}  // namespace

Rational apply_recurrence(const PRecurrence& r, const std::vector<Rational>& L, long start, long n) {
  Rational acc(0);
  for (std::size_t i = 0; i <= r.order; ++i)
    acc += r.coeff_polys[i].eval(Rational(n)) * L[static_cast<std::size_t>(n - start) + i];
  return acc;
}

std::optional<PRecurrence> find_rec(const std::vector<Rational>& L, std::size_t max_c, long start) {
  bool attempted = false;
  for (std::size_t order = 1; order <= max_c; ++order) {
    for (std::size_t degree = 0; order + degree <= max_c; ++degree) {
      const std::size_t unknowns = (order + 1) * (degree + 1);
      if (L.size() <= order) continue;
      const std::size_t eqs = L.size() - order;
      if (eqs < unknowns + kHoldout) continue;
      attempted = true;
      const std::size_t fit = eqs - kHoldout;
      Matrix<Rational> a(fit, unknowns);
      for (std::size_t e = 0; e < fit; ++e) {
        Rational n(start + static_cast<long>(e));
        for (std::size_t i = 0; i <= order; ++i) {
          Rational np(1);
          for (std::size_t j = 0; j <= degree; ++j) {
            a(e, i * (degree + 1) + j) = np * L[e + i];
            np *= n;
          }
        }
      }
      auto ns = nullspace_basis(a);
      if (ns.size() != 1) continue;
      PRecurrence r = normalize(order, degree, ns[0], start);
      if (r.coeff_polys.back().zero()) continue;
      bool ok = true;
      for (std::size_t e = fit; e < eqs && ok; ++e)
        ok = apply_recurrence(r, L, start, start + static_cast<long>(e)).is_zero();
      if (ok) return r;
    }
  }
  if (!attempted)
    throw InsufficientData("find_rec: need at least " + std::to_string(2 + 2 + kHoldout) +
                           " terms for the smallest (order 1, degree 0) ansatz");
  return std::nullopt;
}

}  // namespace expmath
