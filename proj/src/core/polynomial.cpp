#include "expmath/core/polynomial.hpp"

namespace expmath {

Rational primitive_scale(const QPoly& p) {
  if (p.zero()) return Rational(1);
  Integer l = 1, g = 0;
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    l = lcm(l, c.den());
  }
  for (const auto& c : p.coeffs()) {
    if (c.is_zero()) continue;
    Integer v = c.num() * (l / c.den());
    g = gcd(g, v);
  }
  Rational s(l, g);
  if (p.lead().sign() < 0) s = -s;
  return s;
}

QPoly primitive_part(const QPoly& p) { return p * primitive_scale(p); }

QPoly qpoly(std::initializer_list<long> coeffs) {
  std::vector<Rational> v;
  for (long c : coeffs) v.emplace_back(c);
  return QPoly(std::move(v));
}

QPoly qpoly(const std::vector<Rational>& coeffs) { return QPoly(coeffs); }

}  // namespace expmath
