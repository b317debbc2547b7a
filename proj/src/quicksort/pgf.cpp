#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>

#include "expmath/quicksort/quicksort.hpp"

namespace expmath::quicksort {

Variant parse_variant(const std::string& name) {
  static const std::map<std::string, Kind> table = {
      {"nulla", Kind::NullaComparisons}, {"swap1", Kind::SwapI},   {"swap2", Kind::SwapII},
      {"swap3", Kind::SwapIII},          {"swap4", Kind::SwapIV},  {"swap5", Kind::SwapV},
      {"dual", Kind::DualComparisons},   {"dualswaps", Kind::DualSwaps},
      {"threepivot", Kind::ThreePivotComparisons},
  };
  if (auto it = table.find(name); it != table.end()) return {it->second, 1};
  const std::string prefix = "kpivot:";
  if (name.rfind(prefix, 0) == 0) {
    int k = std::stoi(name.substr(prefix.size()));
    if (k < 1) throw std::invalid_argument("kpivot needs k >= 1");
    return {Kind::KPivotLinear, k};
  }
  throw std::invalid_argument("unknown quicksort variant: " + name);
}

std::string variant_name(const Variant& v) {
  switch (v.kind) {
    case Kind::NullaComparisons: return "nulla";
    case Kind::SwapI: return "swap1";
    case Kind::SwapII: return "swap2";
    case Kind::SwapIII: return "swap3";
    case Kind::SwapIV: return "swap4";
    case Kind::SwapV: return "swap5";
    case Kind::DualComparisons: return "dual";
    case Kind::DualSwaps: return "dualswaps";
    case Kind::ThreePivotComparisons: return "threepivot";
    case Kind::KPivotLinear: return "kpivot:" + std::to_string(v.k);
  }
  return "?";
}

// Swap count given the pivot sits at index i and is the k-th smallest:
// the i-1 elements before it are a uniform subset, so the number j of
// smaller ones is hypergeometric and the swaps are i+k-2-2j.
QPoly per_prob(long n, long k, long i) {
  if (k < 1 || i < 1 || k > n || i > n) throw std::invalid_argument("per_prob: need 1 <= k,i <= n");
  QPoly out;
  const Integer total = binomial(n - 1, i - 1);
  long lo = std::max(k - 1 - n + i, 0L), hi = std::min(i - 1, k - 1);
  for (long j = lo; j <= hi; ++j) {
    Integer ways = binomial(k - 1, j) * binomial(n - k, i - 1 - j);
    out = out + QPoly::monomial(Rational(ways, total), i + k - 2 - 2 * j);
  }
  return out;
}

QPoly ip_prob(long n, long k) {
  if (n < 1 || k < 1 || k > n) throw std::invalid_argument("ip_prob: need 1 <= k <= n");
  if (k == n) return QPoly(1);
  QPoly out;
  for (long s = 1; s <= k; ++s) {
    Rational c = Rational(n - k) / Rational(n - 1) * Rational(binomial(k - 1, k - s)) /
                 Rational(binomial(n - 2, k - s));
    out = out + QPoly::monomial(c, s);
  }
  return out;
}

std::vector<Rational> pivot_dist_v5(long n) {
  if (n < 1) throw std::invalid_argument("pivot_dist_v5: n >= 1");
  if (n == 1) return {Rational(1)};
  std::vector<Rational> p(n);
  if (n % 2 == 0) {
    long m = n / 2;
    for (long k = 1; k <= m; ++k) p[k - 1] = p[n - k] = Rational(4 * k - 3) / Rational((2 * m - 1) * 2 * m);
  } else {
    long m = (n + 1) / 2;
    for (long k = 1; k < m; ++k)
      p[k - 1] = p[n - k] = Rational(4 * k - 3) / Rational((2 * m - 1) * (2 * m - 2));
    p[m - 1] = Rational(2) / Rational(2 * m - 1);
  }
  return p;
}

namespace {

// Full polynomials in t.
struct PolyAlg {
  using T = QPoly;
  T one() const { return QPoly(1); }
  T tpow(long m) const { return QPoly::monomial(Rational(1), m); }
  T lift(const QPoly& p) const { return p; }
  T mul(const T& a, const T& b) const { return a * b; }
  T add(const T& a, const T& b) const { return a + b; }
  T scale(const T& a, const Rational& c) const { return c * a; }
  T zero() const { return QPoly(); }
};

// Series in w = t - 1, truncated after w^r.
struct TruncAlg {
  int r;
  using T = std::vector<Rational>;
  T zero() const { return T(r + 1, Rational(0)); }
  T one() const {
    T z = zero();
    z[0] = 1;
    return z;
  }
  T tpow(long m) const {
    T z = zero();
    for (int j = 0; j <= r && j <= m; ++j) z[j] = Rational(binomial(m, j));
    return z;
  }
  T lift(const QPoly& p) const {
    T z = zero();
    for (int s = 0; s <= p.degree(); ++s) {
      if (p[s].is_zero()) continue;
      for (int j = 0; j <= r && j <= s; ++j) z[j] += p[s] * Rational(binomial(s, j));
    }
    return z;
  }
  T mul(const T& a, const T& b) const {
    T z = zero();
    for (int i = 0; i <= r; ++i) {
      if (a[i].is_zero()) continue;
      for (int j = 0; i + j <= r; ++j) z[i + j] += a[i] * b[j];
    }
    return z;
  }
  T add(const T& a, const T& b) const {
    T z = a;
    for (int i = 0; i <= r; ++i) z[i] += b[i];
    return z;
  }
  T scale(const T& a, const Rational& c) const {
    T z = a;
    for (auto& x : z) x *= c;
    return z;
  }
};

template <class Alg>
class Engine {
 public:
  using T = typename Alg::T;
  Engine(Variant v, Alg alg) : v_(v), alg_(alg) {}

  const T& get(long n) {
    while (static_cast<long>(p_.size()) <= n) p_.push_back(compute(static_cast<long>(p_.size())));
    return p_[n];
  }

 private:
  Variant v_;
  Alg alg_;
  std::vector<T> p_, s2_, s4_;
  std::unique_ptr<Engine> sub_;

  // S2(m) = sum_{a+b=m} P_a P_b
  const T& s2(long m) {
    while (static_cast<long>(s2_.size()) <= m) {
      long q = static_cast<long>(s2_.size());
      T acc = alg_.zero();
      for (long a = 0; a <= q; ++a) acc = alg_.add(acc, alg_.mul(get(a), get(q - a)));
      s2_.push_back(std::move(acc));
    }
    return s2_[m];
  }
  const T& s4(long m) {
    while (static_cast<long>(s4_.size()) <= m) {
      long q = static_cast<long>(s4_.size());
      T acc = alg_.zero();
      for (long a = 0; a <= q; ++a) acc = alg_.add(acc, alg_.mul(s2(a), s2(q - a)));
      s4_.push_back(std::move(acc));
    }
    return s4_[m];
  }
  // Helper variant: 1-pivot for short k-pivot lists, in-place swaps under the two-candidate pivot.
  Engine& sub() {
    if (!sub_) {
      Kind k = v_.kind == Kind::SwapV ? Kind::SwapIV : Kind::NullaComparisons;
      sub_ = std::make_unique<Engine>(Variant{k, 1}, alg_);
    }
    return *sub_;
  }
  const T& nulla(long n) { return sub().get(n); }

  T pair(long n, long k) { return alg_.mul(get(k - 1), get(n - k)); }

  T compute(long n) {
    if (n <= 1) return alg_.one();
    const Rational inv_n = Rational(1) / Rational(n);
    switch (v_.kind) {
      case Kind::NullaComparisons:
        return alg_.scale(alg_.mul(alg_.tpow(n - 1), s2(n - 1)), inv_n);
      case Kind::SwapI:
      case Kind::SwapIII: {
        long off = v_.kind == Kind::SwapI ? -1 : 0;
        T acc = alg_.zero();
        for (long k = 1; k <= n; ++k) acc = alg_.add(acc, alg_.mul(pair(n, k), alg_.tpow(k + off)));
        return alg_.scale(acc, inv_n);
      }
      case Kind::SwapII: {
        T acc = alg_.zero();
        for (long k = 1; k <= n; ++k) {
          QPoly q;
          for (long i = 1; i <= n; ++i) q = q + per_prob(n, k, i);
          acc = alg_.add(acc, alg_.mul(pair(n, k), alg_.lift(q)));
        }
        return alg_.scale(acc, inv_n * inv_n);
      }
      case Kind::SwapIV: {
        T acc = alg_.zero();
        for (long k = 1; k <= n; ++k) acc = alg_.add(acc, alg_.mul(pair(n, k), alg_.lift(ip_prob(n, k))));
        return alg_.scale(acc, inv_n);
      }
      case Kind::SwapV: {
        // The biased pivot applies to the top partition; sublists follow the in-place variant.
        auto pr = pivot_dist_v5(n);
        T acc = alg_.zero();
        for (long k = 1; k <= n; ++k)
          acc = alg_.add(acc, alg_.mul(alg_.mul(sub().get(k - 1), sub().get(n - k)),
                                       alg_.lift(pr[k - 1] * ip_prob(n, k))));
        return acc;
      }
      case Kind::DualComparisons: {
        if (n == 2) return alg_.tpow(1);
        T acc = alg_.zero();
        for (long a = 0; a <= n - 2; ++a)
          acc = alg_.add(acc, alg_.mul(alg_.tpow(2 * n - 3 - a), alg_.mul(get(a), s2(n - 2 - a))));
        return alg_.scale(acc, Rational(1) / Rational(binomial(n, 2)));
      }
      case Kind::DualSwaps: {
        const QPoly half = qpoly({Rational(1, 2), Rational(1, 2)});
        if (n == 2) return alg_.lift(half);
        T acc = alg_.zero();
        for (long b = 0; b <= n - 2; ++b)
          acc = alg_.add(acc, alg_.mul(alg_.tpow(n - 2 - b), alg_.mul(get(b), s2(n - 2 - b))));
        return alg_.scale(alg_.mul(acc, alg_.lift(half)), Rational(1) / Rational(binomial(n, 2)));
      }
      case Kind::ThreePivotComparisons: {
        if (n == 2) return alg_.tpow(1);
        QPoly cost = QPoly::monomial(Rational(2, 3), 2 * n - 3) + QPoly::monomial(Rational(1, 3), 2 * n - 4);
        return alg_.scale(alg_.mul(alg_.lift(cost), s4(n - 3)), Rational(1) / Rational(binomial(n, 3)));
      }
      case Kind::KPivotLinear: {
        const long k = v_.k;
        if (n < k) return nulla(n);
        // Parts 1..k cost their index per element; the top part costs k.
        const long rest = n - k;
        std::vector<T> a(rest + 1, alg_.zero());
        a[0] = alg_.one();
        for (long part = 1; part <= k + 1; ++part) {
          long w = std::min(part, k);
          std::vector<T> b(rest + 1, alg_.zero());
          for (long m = 0; m <= rest; ++m)
            for (long s = 0; s <= m; ++s)
              b[m] = alg_.add(b[m], alg_.mul(a[m - s], alg_.mul(get(s), alg_.tpow(w * s))));
          a = std::move(b);
        }
        return alg_.scale(alg_.mul(a[rest], nulla(k)), Rational(1) / Rational(binomial(n, k)));
      }
    }
    throw std::logic_error("unhandled variant");
  }
};

using Key = std::tuple<int, int, int>;
Key key_of(const Variant& v, int r) { return {static_cast<int>(v.kind), v.k, r}; }

std::mutex cache_mutex;
std::map<Key, std::unique_ptr<Engine<PolyAlg>>> poly_cache;
std::map<Key, std::unique_ptr<Engine<TruncAlg>>> trunc_cache;

}  // namespace

QPoly pgf(const Variant& v, long n) {
  if (n < 0) throw std::invalid_argument("pgf: n >= 0");
  std::lock_guard lock(cache_mutex);
  auto& e = poly_cache[key_of(v, -1)];
  if (!e) e = std::make_unique<Engine<PolyAlg>>(v, PolyAlg{});
  return e->get(n);
}

TruncatedSeries truncated_moments(const Variant& v, long n, int r) {
  if (n < 0 || r < 0) throw std::invalid_argument("truncated_moments: n, r >= 0");
  std::lock_guard lock(cache_mutex);
  auto& e = trunc_cache[key_of(v, r)];
  if (!e) e = std::make_unique<Engine<TruncAlg>>(v, TruncAlg{r});
  return {r, e->get(n)};
}

}  // namespace expmath::quicksort
