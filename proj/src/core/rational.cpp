#include "expmath/core/rational.hpp"

#include <mutex>
#include <vector>

namespace expmath {

Rational::Rational(const Integer& num, const Integer& den) {
  if (sgn(den) == 0) throw DivisionByZero();
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational Rational::parse(const std::string& s) {
  auto slash = s.find('/');
  try {
    if (slash == std::string::npos) return Rational(Integer(s));
    return Rational(Integer(s.substr(0, slash)), Integer(s.substr(slash + 1)));
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument("not a rational: '" + s + "'");
  }
}

Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

Rational pow(const Rational& x, long e) {
  if (e < 0) return Rational(1) / pow(x, -e);
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), x.num().get_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(d.get_mpz_t(), x.den().get_mpz_t(), static_cast<unsigned long>(e));
  return Rational(n, d);
}

Integer binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

Integer factorial(long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

Rational harmonic(long n, int k) {
  // Prefix sums cached per order; guarded so callers may share it across threads.
  static std::mutex mu;
  static std::vector<std::vector<Rational>> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (static_cast<int>(cache.size()) <= k) cache.resize(k + 1);
  auto& c = cache[k];
  if (c.empty()) c.push_back(Rational(0));
  while (static_cast<long>(c.size()) <= n) {
    long i = static_cast<long>(c.size());
    c.push_back(c.back() + Rational(1) / pow(Rational(i), k));
  }
  return c[n];
}

std::string to_string(const Rational& x) { return x.str(); }
std::string to_string(const Integer& x) { return x.get_str(); }

Integer exact_divide(const Integer& a, const Integer& b) {
  if (sgn(b) == 0) throw DivisionByZero();
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw std::domain_error("inexact division");
  Integer q;
  mpz_divexact(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return q;
}

}  // namespace expmath
