#include "expmath/parking/parking.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace expmath::parking {

namespace {

using Key = std::pair<long, long>;

Integer count_memo(long n, long a, std::map<Key, Integer>& memo) {
  if (n == 0) return 1;
  if (a <= 0) return 0;
  auto it = memo.find({n, a});
  if (it != memo.end()) return it->second;
  Integer s = 0;
  for (long k = 0; k <= n; ++k) s += binomial(n, k) * count_memo(n - k, a + k - 1, memo);
  memo[{n, a}] = s;
  return s;
}

// Shared driver for the two weighted recurrences; `weight(n,a,k)` is the x-power of term k
// and `global(n)` a common x-power factor.
template <class W, class G>
StatPoly stat_memo(long n, long a, std::map<Key, StatPoly>& memo, W weight, G global) {
  if (n == 0) return StatPoly(Integer(1));
  if (a <= 0) return StatPoly();
  auto it = memo.find({n, a});
  if (it != memo.end()) return it->second;
  StatPoly s;
  for (long k = 0; k <= n; ++k) {
    StatPoly sub = stat_memo(n - k, a + k - 1, memo, weight, global);
    if (sub.zero()) continue;
    s += (sub * binomial(n, k)).shift(static_cast<std::size_t>(weight(n, a, k)));
  }
  s = s.shift(static_cast<std::size_t>(global(n)));
  memo[{n, a}] = s;
  return s;
}

Rational moment_sum(long n, long a) {
  // sum_{j=1..n} n!/((n-j)! (a+n)^(j-1))
  Rational s(0), falling(1);
  Rational base(a + n);
  Rational inv_pow(1);
  for (long j = 1; j <= n; ++j) {
    falling *= Rational(n - j + 1);
    s += falling * inv_pow;
    inv_pow /= base;
  }
  return s;
}

}  // namespace

bool is_a_parking(const ParkingFunction& p, long a) {
  ParkingFunction s = p;
  std::sort(s.begin(), s.end());
  for (std::size_t i = 0; i < s.size(); ++i)
    if (s[i] < 1 || s[i] > a + static_cast<long>(i)) return false;
  return true;
}

Integer count_parking(long n, long a) {
  if (n < 0 || a < 0) throw std::invalid_argument("count_parking: n, a >= 0");
  std::map<Key, Integer> memo;
  return count_memo(n, a, memo);
}

std::vector<ParkingFunction> enumerate_parking(long n, long a) {
  const long base = n + a - 1;
  double size = std::pow(static_cast<double>(std::max(base, 1L)), static_cast<double>(n));
  if (size > 1e7) throw std::invalid_argument("enumerate_parking: (a+n-1)^n exceeds the 10^7 cap");
  std::vector<ParkingFunction> out;
  if (n == 0) return {ParkingFunction{}};
  if (base < 1) return out;
  ParkingFunction p(static_cast<std::size_t>(n), 1);
  while (true) {
    if (is_a_parking(p, a)) out.push_back(p);
    std::size_t i = p.size();
    while (i > 0 && p[i - 1] == base) p[--i] = 1;
    if (i == 0) break;
    ++p[i - 1];
  }
  return out;
}

StatPoly sum_gf(long n, long a) {
  std::map<Key, StatPoly> memo;
  return stat_memo(n, a, memo, [](long, long, long) { return 0L; }, [](long m) { return m; });
}

StatPoly area_gf(long n, long a) {
  std::map<Key, StatPoly> memo;
  return stat_memo(n, a, memo, [](long, long b, long k) { return k * (k + 2 * b - 3) / 2; },
                   [](long) { return 0L; });
}

Rational expectation_sum(long n, long a) {
  return Rational(n * (a + n + 1)) / Rational(2) - moment_sum(n, a) / Rational(2);
}

Rational expectation_area(long n, long a) {
  return Rational(n * (a - 2)) / Rational(2) + moment_sum(n, a) / Rational(2);
}

Rational w_value(long n) {
  Rational s(0), term(1);  // n^k/k!
  for (long k = 0; k <= n - 2; ++k) {
    if (k > 0) term *= Rational(n) / Rational(k);
    s += term;
  }
  return Rational(factorial(n)) / pow(Rational(n), n - 1) * s;
}

Rational factorial_moment(int k, long n, long a) {
  // the first moment has an exact O(n) sum; the polynomial route is O(n^3) in size
  if (k == 1) return expectation_area(n, a);
  StatPoly q = area_gf(n, a);
  Integer total = q.eval(Integer(1));
  for (int i = 0; i < k; ++i) q = q.derivative();
  return Rational(q.eval(Integer(1)), total);
}

MomentFit fit_moment_expression(int k, std::vector<long> a_values, long n_lo, long n_hi) {
  std::sort(a_values.begin(), a_values.end());
  const int deg_n = 2 * k;
  const int deg_a = std::min<int>(2 * k, static_cast<int>(a_values.size()) - 1);
  MomentFit fit;
  for (int e = 0; e <= 1; ++e)
    for (int j = 0; j <= deg_a; ++j)
      for (int i = 0; i <= deg_n; ++i) fit.basis.terms.push_back(AnsatzTerm{i, j, {}, e});
  fit.basis.opaque = [](const AnsatzPoint& p) { return expectation_area(p.n, p.a); };
  AnsatzData data;
  // held-out points must span every a, so interleave by n
  for (long n = n_lo; n <= n_hi; ++n)
    for (long a : a_values) data.push_back({{n, a}, factorial_moment(k, n, a)});
  auto c = ansatz_fit(data, fit.basis, 0);
  if (!c) throw std::runtime_error("fit_moment_expression: no fit; raise the degree bound or the data range");
  fit.coeffs = *c;
  return fit;
}

LabeledForest parking_to_forest(const ParkingFunction& p, std::size_t a) {
  if (!is_a_parking(p, static_cast<long>(a))) throw std::invalid_argument("parking_to_forest: not an a-parking function");
  const std::size_t n = p.size();
  // stable sort of the two-line array by value; ties keep ascending vertex labels
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&p](std::size_t x, std::size_t y) { return p[x] < p[y]; });
  std::vector<std::size_t> sigma(n);
  for (std::size_t j = 0; j < n; ++j) sigma[j] = a + 1 + order[j];
  auto relabel = [&](std::size_t r) { return r <= a ? r : sigma[r - a - 1]; };
  LabeledForest f{a, n, {}};
  for (std::size_t j = 0; j < n; ++j) f.parent[sigma[j]] = relabel(static_cast<std::size_t>(p[order[j]]));
  return f;
}

ParkingFunction forest_to_parking(const LabeledForest& f) {
  std::map<std::size_t, std::vector<std::size_t>> children;
  for (const auto& [v, par] : f.parent) {
    if (v <= f.a || v > f.a + f.n || par < 1 || par > f.a + f.n) throw std::invalid_argument("forest: bad label");
    children[par].push_back(v);
  }
  if (f.parent.size() != f.n) throw std::invalid_argument("forest: every non-root needs a parent");
  std::map<std::size_t, std::size_t> index;
  std::deque<std::size_t> queue;
  for (std::size_t r = 1; r <= f.a; ++r) {
    index[r] = r;
    queue.push_back(r);
  }
  std::size_t next = f.a + 1;
  while (!queue.empty()) {
    std::size_t v = queue.front();
    queue.pop_front();
    auto it = children.find(v);
    if (it == children.end()) continue;
    std::sort(it->second.begin(), it->second.end());
    for (std::size_t c : it->second) {
      index[c] = next++;
      queue.push_back(c);
    }
  }
  if (next != f.a + f.n + 1) throw std::invalid_argument("forest: cycle or vertex not reaching a root");
  ParkingFunction p(f.n);
  for (const auto& [v, par] : f.parent) p[v - f.a - 1] = static_cast<long>(index.at(par));
  return p;
}

Distribution distribution_export(long n, long a) {
  StatPoly q = area_gf(n, a);
  Distribution d;
  Integer total = q.eval(Integer(1));
  Rational m1(0), m2(0);
  for (std::size_t s = 0; s <= static_cast<std::size_t>(std::max(q.degree(), 0)); ++s) {
    Integer c = q[s];
    d.rows.push_back({static_cast<long>(s), c});
    m1 += Rational(Integer(c * s));
    m2 += Rational(Integer(c * s * s));
  }
  d.mean = m1 / Rational(total);
  d.variance = m2 / Rational(total) - d.mean * d.mean;
  double mu = d.mean.to_double(), sd = std::sqrt(d.variance.to_double());
  for (const auto& r : d.rows) {
    double prob = Rational(r.count, total).to_double();
    d.scaled.push_back({sd > 0 ? (static_cast<double>(r.area) - mu) / sd : 0.0, prob * sd});
  }
  return d;
}

std::string distribution_csv(const Distribution& d, bool scaled) {
  std::ostringstream os;
  os.precision(12);
  if (scaled) {
    os << "z,density\n";
    for (const auto& r : d.scaled) os << r.z << ',' << r.density << '\n';
  } else {
    os << "statistic,count\n";
    for (const auto& r : d.rows) os << r.area << ',' << r.count.get_str() << '\n';
  }
  return os.str();
}

}  // namespace expmath::parking
