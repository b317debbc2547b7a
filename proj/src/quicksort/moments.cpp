#include <gmpxx.h>

#include <stdexcept>

#include "expmath/quicksort/quicksort.hpp"

namespace expmath::quicksort {

Integer stirling2(int n, int k) {
  if (n < 0 || k < 0) return 0;
  std::vector<Integer> row(k + 1, 0);
  row[0] = 1;  // S(0,0)
  for (int i = 1; i <= n; ++i) {
    for (int j = std::min(i, k); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[k];
}

std::vector<Rational> stirling_raw_from_factorial(const std::vector<Rational>& f) {
  const int r = static_cast<int>(f.size());
  std::vector<Rational> raw(r, Rational(0));
  for (int m = 1; m <= r; ++m)
    for (int j = 1; j <= m; ++j) raw[m - 1] += Rational(stirling2(m, j)) * f[j - 1];
  return raw;
}

std::vector<Rational> central_from_raw(const std::vector<Rational>& raws, const Rational& mean) {
  const int r = static_cast<int>(raws.size());
  std::vector<Rational> out(r + 1, Rational(0));
  auto raw = [&](int i) { return i == 0 ? Rational(1) : raws[i - 1]; };
  for (int j = 0; j <= r; ++j)
    for (int i = 0; i <= j; ++i) out[j] += Rational(binomial(j, i)) * raw(i) * pow(-mean, j - i);
  return out;
}

MomentTable moments_from_pgf(const QPoly& p, int r) {
  if (r < 1) throw std::invalid_argument("moments_from_pgf: r >= 1");
  std::vector<Rational> raws;
  QPoly theta = p;
  for (int j = 1; j <= r; ++j) {
    theta = theta.derivative().shift(1);
    raws.push_back(theta.eval(Rational(1)));
  }
  MomentTable t;
  t.mean = raws[0];
  t.central = central_from_raw(raws, t.mean);
  return t;
}

std::vector<Rational> factorial_moments(const TruncatedSeries& s) {
  std::vector<Rational> f;
  for (int j = 1; j <= s.order; ++j) f.push_back(s.coeffs[j] * Rational(factorial(j)));
  return f;
}

MomentTable moments(const Variant& v, long n, int r) {
  if (r < 1) throw std::invalid_argument("moments: r >= 1");
  auto raws = stirling_raw_from_factorial(factorial_moments(truncated_moments(v, n, r)));
  MomentTable t;
  t.mean = raws[0];
  t.central = central_from_raw(raws, t.mean);
  return t;
}

std::vector<Rational> mean_sequence(const Variant& v, long N) {
  std::vector<Rational> out;
  for (long n = 1; n <= N; ++n) out.push_back(truncated_moments(v, n, 1).coeffs[1]);
  return out;
}

std::vector<double> scaled_moments(const Variant& v, long n, int rmax) {
  auto t = moments(v, n, rmax);
  const Rational var = t.variance();
  if (var.sign() <= 0) throw std::domain_error("scaled_moments: zero variance");
  constexpr mp_bitcnt_t prec = 512;
  mpf_class sd(0, prec);
  sd = sqrt(mpf_class(var.raw(), prec));
  std::vector<double> out;
  for (int r = 3; r <= rmax; ++r) {
    Rational ratio = t.central[r] / pow(var, r / 2);
    mpf_class x(ratio.raw(), prec);
    if (r % 2 == 1) x /= sd;
    out.push_back(x.get_d());
  }
  return out;
}

MomentFit fit_moment(const Variant& v, int r, const AnsatzBasis& basis, long n_max) {
  AnsatzData data;
  for (long n = 1; n <= n_max; ++n) {
    auto t = moments(v, n, std::max(r, 1));
    data.push_back({AnsatzPoint{n, 0}, r == 1 ? t.mean : t.central[r]});
  }
  const std::size_t need = basis.terms.size() + 3;
  for (std::size_t skip = 0; skip + need <= data.size(); ++skip) {
    if (auto c = ansatz_fit(data, basis, skip)) return {basis, *c, static_cast<long>(skip) + 1};
  }
  throw std::runtime_error("fit_moment: no fit for " + variant_name(v));
}

}  // namespace expmath::quicksort
