#include "expmath/spanning/grid.hpp"

#include <stdexcept>
#include <string>

#include "expmath/guess/cfinite.hpp"
#include "expmath/linalg/determinant.hpp"

namespace expmath::spanning {

namespace {

using QV = RationalFunction<Rational>;  // the field Q(v)

std::optional<CFiniteSpec<Rational>> guess_either(const std::vector<Rational>& seq) {
  if (auto s = guess_rec(seq, true)) return s;
  return guess_rec(seq);
}

// `batch(lo, hi)` yields the terms for n = lo..hi; the window doubles on failure.
template <class Fn>
QRatFunc guess_gf(std::size_t initial_terms, Fn batch, const char* what, std::size_t* used = nullptr) {
  std::vector<Rational> seq;
  for (std::size_t terms = initial_terms; terms <= 8 * initial_terms; terms *= 2) {
    for (const auto& x : batch(seq.size() + 1, terms)) seq.emplace_back(x);
    if (used) *used = seq.size();
    if (auto s = guess_either(seq))
      if (auto f = c_to_r(*s, 1)) return *f;
  }
  throw std::runtime_error(std::string(what) + ": no recurrence found; enlarge the data window");
}

QPoly lcm(const QPoly& a, const QPoly& b) { return exact_divide(a * b, gcd(a, b)); }

}  // namespace

QRatFunc BivariateGF::at_v(const Rational& v) const {
  auto spec = [&v](const Polynomial<QPoly>& p) {
    std::vector<Rational> c;
    for (const auto& x : p.coeffs()) c.push_back(x.eval(v));
    return QPoly(c);
  };
  return QRatFunc(spec(numer), spec(denom));
}

std::vector<Integer> spanning_counts_serial(std::size_t k, std::size_t lo, std::size_t hi) {
  std::vector<Integer> out;
  for (std::size_t n = lo; n <= hi; ++n) out.push_back(spanning_tree_count(grid_graph(k, n)));
  return out;
}

std::vector<Integer> spanning_counts(std::size_t k, std::size_t lo, std::size_t hi) {
  std::vector<Integer> out(hi >= lo ? hi - lo + 1 : 0);
  const auto count = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = count - 1; i >= 0; --i)
    out[static_cast<std::size_t>(i)] = spanning_tree_count(grid_graph(k, lo + static_cast<std::size_t>(i)));
  return out;
}

Rational joint_resistance(std::size_t k, std::size_t n) {
  if (k * n < 2) throw std::invalid_argument("joint_resistance: need k*n >= 2");
  Graph g = grid_graph(k, n);
  return Rational(two_forest_count(g, 1, k * n), spanning_tree_count(g));
}

Rational doyle_constant(std::size_t k) {
  Rational c(0);
  for (std::size_t j = 1; j < k; ++j) c += pow(Rational(Integer(j), Integer(k)), 2);
  return Rational(2) * c;
}

GridGF gf_spanning_grid(std::size_t k) {
  if (k == 0) throw std::invalid_argument("gf_spanning_grid: k >= 1");
  const std::size_t terms = 2 * (std::size_t{1} << (k - 1)) + 6;
  std::size_t used = 0;
  QRatFunc f = guess_gf(terms, [k](std::size_t lo, std::size_t hi) {
    return spanning_counts(k, lo, hi);
  }, "gf_spanning_grid", &used);
  return {k, f, {1, used}};
}

QRatFunc gf_two_forest_grid(std::size_t k) {
  if (k == 0) throw std::invalid_argument("gf_two_forest_grid: k >= 1");
  const std::size_t terms = 4 * (std::size_t{1} << (k - 1)) + 10;
  return guess_gf(terms, [k](std::size_t lo, std::size_t hi) {
    std::vector<Integer> out(hi - lo + 1);
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(out.size()); ++i) {
      std::size_t n = lo + static_cast<std::size_t>(i);
      out[static_cast<std::size_t>(i)] = k * n < 2 ? Integer(0) : two_forest_count(grid_graph(k, n), 1, k * n);
    }
    return out;
  }, "gf_two_forest_grid");
}

QPoly vertical_weighted_count(std::size_t k, std::size_t n) {
  auto l = vertical_laplacian(grid_graph(k, n));
  const std::size_t last = l.rows() - 1;
  auto d = determinant(l.minor(last, last));
  std::vector<Rational> c;
  for (const auto& x : d.coeffs()) c.emplace_back(x);
  return QPoly(c);
}

BivariateGF ver_gf(std::size_t k) {
  if (k == 0) throw std::invalid_argument("ver_gf: k >= 1");
  const std::size_t start = 2 * (std::size_t{1} << (k - 1)) + 6;
  std::vector<QV> seq;
  std::optional<RationalFunction<QV>> gf;
  for (std::size_t terms = start; terms <= 4 * start && !gf; terms *= 2) {
    std::vector<QPoly> polys(terms - seq.size());
    const auto base = seq.size();
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < static_cast<long>(polys.size()); ++i)
      polys[static_cast<std::size_t>(i)] = vertical_weighted_count(k, base + static_cast<std::size_t>(i) + 1);
    for (auto& p : polys) seq.emplace_back(p);
    std::optional<CFiniteSpec<QV>> spec = guess_rec(seq, true);
    if (!spec) spec = guess_rec(seq);
    if (spec) gf = c_to_r(*spec, 1);
  }
  if (!gf) throw std::runtime_error("ver_gf: no recurrence found; enlarge the data window");

  // clear v-denominators, then remove the common v-content
  QPoly l(1);
  for (const auto& c : gf->numer().coeffs()) l = lcm(l, c.denom());
  for (const auto& c : gf->denom().coeffs()) l = lcm(l, c.denom());
  auto lift = [&l](const Polynomial<QV>& p) {
    std::vector<QPoly> c;
    for (const auto& x : p.coeffs()) c.push_back(x.numer() * exact_divide(l, x.denom()));
    return c;
  };
  auto num = lift(gf->numer()), den = lift(gf->denom());
  QPoly g;
  for (const auto& c : num) g = gcd(g, c);
  for (const auto& c : den) g = gcd(g, c);
  for (auto& c : num) c = exact_divide(c, g);
  for (auto& c : den) c = exact_divide(c, g);
  Rational s = primitive_scale(den.front());
  for (auto& c : num) c = c * s;
  for (auto& c : den) c = c * s;
  return {Polynomial<QPoly>(num), Polynomial<QPoly>(den)};
}

}  // namespace expmath::spanning
