#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <stdexcept>

#include "expmath/quicksort/quicksort.hpp"

namespace expmath::quicksort {

namespace {

// Unbiased draw from [0, bound) by rejecting the short tail.
std::uint64_t draw(std::mt19937_64& g, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    std::uint64_t x = g();
    if (x >= threshold) return x % bound;
  }
}

using List = std::vector<std::uint32_t>;

std::uint64_t sort1(const List& a) {
  if (a.size() <= 1) return 0;
  const auto pivot = a[0];
  List lo, hi;
  for (std::size_t i = 1; i < a.size(); ++i) (a[i] < pivot ? lo : hi).push_back(a[i]);
  return (a.size() - 1) + sort1(lo) + sort1(hi);
}

std::uint64_t sortk(const List& a, std::size_t k) {
  if (a.size() < k || k == 0) return sort1(a);
  List piv(a.begin(), a.begin() + static_cast<long>(k));
  std::uint64_t c = sort1(piv);
  std::sort(piv.begin(), piv.end());
  std::vector<List> parts(k + 1);
  for (std::size_t i = k; i < a.size(); ++i) {
    std::size_t lo = 0, hi = k;
    while (lo < hi) {
      std::size_t mid = (lo + hi) / 2;
      ++c;
      if (a[i] < piv[mid]) hi = mid;
      else lo = mid + 1;
    }
    parts[lo].push_back(a[i]);
  }
  for (const auto& p : parts) c += sortk(p, k);
  return c;
}

MCResult summarize(const std::vector<std::uint64_t>& counts) {
  const long double T = static_cast<long double>(counts.size());
  unsigned __int128 s = 0, s2 = 0;
  for (auto c : counts) {
    s += c;
    s2 += static_cast<unsigned __int128>(c) * c;
  }
  long double mean = static_cast<long double>(s) / T;
  long double var = 0;
  if (counts.size() > 1) var = (static_cast<long double>(s2) - T * mean * mean) / (T - 1);
  if (var < 0) var = 0;
  return {static_cast<double>(mean), static_cast<double>(var), static_cast<double>(std::sqrt(var / T))};
}

void check(const MCConfig& cfg) {
  if (cfg.trials < 1 || cfg.n < 0 || cfg.k < 1) throw std::invalid_argument("mc: need trials >= 1, n >= 0, k >= 1");
}

}  // namespace

std::uint64_t mc_trial(const MCConfig& cfg, std::uint64_t trial) {
  std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                    static_cast<std::uint32_t>(trial), static_cast<std::uint32_t>(trial >> 32)};
  std::mt19937_64 g(seq);
  List a(static_cast<std::size_t>(cfg.n));
  std::iota(a.begin(), a.end(), 0u);
  for (std::size_t i = a.size(); i > 1; --i) std::swap(a[i - 1], a[draw(g, i)]);
  return sortk(a, static_cast<std::size_t>(cfg.k));
}

MCResult mc_run_serial(const MCConfig& cfg) {
  check(cfg);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(cfg.trials));
  for (long t = 0; t < cfg.trials; ++t) counts[t] = mc_trial(cfg, static_cast<std::uint64_t>(t));
  return summarize(counts);
}

MCResult mc_run(const MCConfig& cfg) {
  check(cfg);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(cfg.trials));
#pragma omp parallel for schedule(dynamic, 64)
  for (long t = 0; t < cfg.trials; ++t) counts[t] = mc_trial(cfg, static_cast<std::uint64_t>(t));
  return summarize(counts);
}

}  // namespace expmath::quicksort
