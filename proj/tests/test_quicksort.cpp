#include <doctest.h>

#include <cmath>

#include "closed_forms.hpp"
#include "expmath/guess/holonomic.hpp"
#include "expmath/quicksort/quicksort.hpp"

using namespace expmath;
using namespace expmath::quicksort;
using closed::q;

namespace {

const Variant kNulla{Kind::NullaComparisons, 1};
const Variant kDual{Kind::DualComparisons, 1};
const Variant kThree{Kind::ThreePivotComparisons, 1};

// Swap-count distribution for a fixed pivot index, by the product formula.
QPoly per_prob_product(long n, long k, long i) {
  QPoly out;
  for (long j = std::max(k - 1 - n + i, 0L); j <= std::min(i - 1, k - 1); ++j) {
    Rational c(binomial(i - 1, j));
    for (long s = 0; s <= j - 1; ++s) c *= Rational(k - 1 - s) / Rational(n - 1 - s);
    for (long s = 0; s <= i - j - 2; ++s) c *= Rational(n - k - s) / Rational(n - 1 - j - s);
    out = out + QPoly::monomial(c, i + k - 2 - 2 * j);
  }
  return out;
}

std::vector<Rational> parse_list(std::initializer_list<const char*> xs) {
  std::vector<Rational> v;
  for (auto x : xs) v.push_back(Rational::parse(x));
  return v;
}

}  // namespace

TEST_CASE("variant names round trip") {
  for (auto name : {"nulla", "swap1", "swap2", "swap3", "swap4", "swap5", "dual", "dualswaps", "threepivot", "kpivot:4"})
    CHECK(variant_name(parse_variant(name)) == name);
  CHECK_THROWS(parse_variant("bogus"));
}

TEST_CASE("small pgfs") {
  CHECK(pgf(kDual, 5) == QPoly::monomial(q(2, 15), 10) + QPoly::monomial(q(1, 15), 9) +
                             QPoly::monomial(q(1, 5), 8) + QPoly::monomial(q(4, 15), 7) + QPoly::monomial(q(1, 3), 6));
  CHECK(pgf({Kind::SwapI, 1}, 2) == qpoly({q(1, 2), q(1, 2)}));
  CHECK(pgf({Kind::SwapII, 1}, 2) == qpoly({q(1, 2), q(1, 2)}));
  CHECK(pgf(kThree, 3) == qpoly({q(0), q(0), q(1, 3), q(2, 3)}));
}

TEST_CASE("pgfs are probability distributions") {
  for (auto name : {"nulla", "swap1", "swap2", "swap3", "swap4", "swap5", "dual", "dualswaps", "threepivot", "kpivot:3"}) {
    auto v = parse_variant(name);
    for (long n = 0; n <= 14; ++n) {
      auto p = pgf(v, n);
      CHECK(p.eval(Rational(1)) == Rational(1));
      for (const auto& c : p.coeffs()) CHECK(c.sign() >= 0);
    }
  }
}

TEST_CASE("one and two pivots give the same comparison distribution") {
  for (long n = 0; n <= 12; ++n) CHECK(pgf(kNulla, n) == pgf(kDual, n));
}

TEST_CASE("linear k-pivot with k = 2 matches dual") {
  for (long n = 0; n <= 10; ++n) CHECK(pgf({Kind::KPivotLinear, 2}, n) == pgf(kDual, n));
  for (long n = 0; n <= 10; ++n) CHECK(pgf({Kind::KPivotLinear, 1}, n) == pgf(kNulla, n));
}

TEST_CASE("per_prob") {
  CHECK(per_prob(9, 5, 5) == qpoly({q(1, 70), q(0), q(8, 35), q(0), q(18, 35), q(0), q(8, 35), q(0), q(1, 70)}));
  for (long n = 1; n <= 9; ++n)
    for (long k = 1; k <= n; ++k) {
      CHECK(per_prob(n, k, 1) == QPoly::monomial(Rational(1), k - 1));
      for (long i = 1; i <= n; ++i) {
        CHECK(per_prob(n, k, i) == per_prob_product(n, k, i));
        CHECK(per_prob(n, k, i).eval(Rational(1)) == Rational(1));
      }
    }
}

TEST_CASE("ip_prob and pivot distribution") {
  CHECK(ip_prob(2, 1) == QPoly::x());
  for (long n = 2; n <= 12; ++n) {
    CHECK(ip_prob(n, n) == QPoly(1));
    for (long k = 1; k <= n; ++k) CHECK(ip_prob(n, k).eval(Rational(1)) == Rational(1));
  }
  CHECK(pivot_dist_v5(2) == std::vector<Rational>{q(1, 2), q(1, 2)});
  CHECK(pivot_dist_v5(3) == std::vector<Rational>{q(1, 6), q(2, 3), q(1, 6)});
  for (long n = 1; n <= 50; ++n) {
    auto p = pivot_dist_v5(n);
    Rational s(0);
    for (long k = 0; k < n; ++k) {
      s += p[k];
      CHECK(p[k] == p[n - 1 - k]);
    }
    CHECK(s == Rational(1));
  }
}

TEST_CASE("stirling transforms") {
  CHECK(stirling2(4, 2) == 7);
  CHECK(stirling2(5, 3) == 25);
  Rational mu(3), f2(5);
  auto raw = stirling_raw_from_factorial({mu, f2});
  CHECK(raw[1] == f2 + mu);
  // X == 4: every central moment above order 0 vanishes
  auto c = central_from_raw({Rational(4), Rational(16), Rational(64)}, Rational(4));
  CHECK(c[1] == 0);
  CHECK(c[2] == 0);
  CHECK(c[3] == 0);
}

TEST_CASE("truncated engine agrees with full pgfs") {
  for (auto name : {"swap1", "swap4", "dualswaps", "threepivot", "kpivot:3"}) {
    auto v = parse_variant(name);
    for (long n = 0; n <= 15; ++n) {
      auto full = moments_from_pgf(pgf(v, n), 4);
      auto tr = moments(v, n, 4);
      CHECK(full.mean == tr.mean);
      CHECK(full.central == tr.central);
      CHECK(truncated_moments(v, n, 4).coeffs[0] == Rational(1));
    }
  }
  CHECK(moments_from_pgf(pgf({Kind::SwapII, 1}, 2), 2).variance() == q(1, 4));
  CHECK(moments(kNulla, 30, 2).variance() == closed::qs_comparisons(2, 30));
}

TEST_CASE("closed forms") {
  for (long n = 1; n <= 20; ++n) {
    auto a = moments(kNulla, n, 4);
    auto i1 = moments({Kind::SwapI, 1}, n, 4);
    auto i2 = moments({Kind::SwapII, 1}, n, 4);
    for (int r = 2; r <= 4; ++r) {
      CHECK(a.central[r] == closed::qs_comparisons(r, n));
      CHECK(i1.central[r] == closed::qs_swap1(r, n));
      CHECK(i2.central[r] == closed::qs_swap2(r, n));
    }
    CHECK(a.mean == closed::qs_comparisons(1, n));
    CHECK(i1.mean == i2.mean);
    if (n >= 3) CHECK(i2.variance() < i1.variance());
    CHECK(moments({Kind::SwapIV, 1}, n, 1).mean == closed::qs_swap4(1, n));
    if (n >= 2) CHECK(moments({Kind::SwapIII, 1}, n, 1).mean == closed::qs_swap3(1, n));
    if (n >= 4) CHECK(moments({Kind::DualSwaps, 1}, n, 1).mean == closed::qs_dualswaps_mean(n));
  }
  CHECK(moments({Kind::SwapIII, 1}, 1, 1).mean != closed::qs_swap3(1, 1));
  CHECK(moments({Kind::DualSwaps, 1}, 3, 1).mean != closed::qs_dualswaps_mean(3));
  CHECK(moments({Kind::SwapIII, 1}, 2, 2).variance() != closed::qs_swap3(2, 2));
  CHECK(moments({Kind::SwapIII, 1}, 3, 2).variance() != closed::qs_swap3(2, 3));
  for (long n = 4; n <= 20; ++n) CHECK(moments({Kind::SwapIII, 1}, n, 2).variance() == closed::qs_swap3(2, n));
  // the published variance for variant IV exceeds 1/4 at n = 2, where the count is 0 or 1
  CHECK(closed::qs_swap4(2, 2) > q(1, 4));
  for (long n = 2; n <= 20; ++n) CHECK(moments({Kind::SwapIV, 1}, n, 2).variance() == closed::qs_swap4_variance_alt(n));
}

TEST_CASE("fit_moment recovers the swap variance") {
  AnsatzBasis b = AnsatzBasis::from({{2, 0, {}, 0}, {1, 0, {}, 0}, {0, 0, {}, 0}, {1, 0, {1}, 0}, {0, 0, {1}, 0},
                                     {2, 0, {0, 1}, 0}, {1, 0, {0, 1}, 0}, {0, 0, {0, 1}, 0}});
  auto fit = fit_moment({Kind::SwapI, 1}, 2, b, 20);
  for (long n = fit.n0; n <= 25; ++n)
    CHECK(b.eval(fit.coeffs, {n, 0}) == closed::qs_swap1(2, n));
  // the rational term 1/n needs its own column
  b.terms.push_back({-1, 0, {}, 0});
  auto f3 = fit_moment({Kind::SwapIII, 1}, 2, b, 24);
  CHECK(f3.n0 == 4);
  for (long n = f3.n0; n <= 25; ++n) CHECK(b.eval(f3.coeffs, {n, 0}) == closed::qs_swap3(2, n));
}

TEST_CASE("mean sequences") {
  CHECK(mean_sequence(kThree, 10) ==
        parse_list({"0", "1", "8/3", "14/3", "106/15", "49/5", "64/5", "561/35", "1226/63", "5192/225"}));
  auto iv = mean_sequence({Kind::SwapIV, 1}, 20);
  auto v = mean_sequence({Kind::SwapV, 1}, 20);
  CHECK(std::vector<Rational>(iv.begin(), iv.begin() + 5) == parse_list({"0", "1/2", "7/6", "2", "179/60"}));
  CHECK(std::vector<Rational>(v.begin(), v.begin() + 5) == parse_list({"0", "1/2", "4/3", "20/9", "155/48"}));
  CHECK(v[19] == Rational::parse("1136599735/40209624"));
  for (long n = 14; n <= 20; ++n) CHECK(v[n - 1] < iv[n - 1]);
  CHECK(v[12] > iv[12]);
}

TEST_CASE("three-pivot mean recurrence") {
  auto means = mean_sequence(kThree, 40);
  auto rec = find_rec(means, 8);
  REQUIRE(rec.has_value());
  CHECK(rec->order == 4);
}

TEST_CASE("scaled moments") {
  auto s = scaled_moments({Kind::SwapIV, 1}, 100, 10);
  const double want[] = {0.7810052982, 3.942047050, 9.146681877, 37.12169647,
                         137.7143092,  613.5286860, 2872.409923, 14709.75560};
  REQUIRE(s.size() == 8);
  for (int i = 0; i < 8; ++i) CHECK(std::abs(s[i] / want[i] - 1) < 1e-6);
}

TEST_CASE("monte carlo") {
  CHECK(mc_run({2, 1, 50, 7}).mean == 1.0);
  MCConfig cfg{10, 3, 4000, 12345};
  auto a = mc_run(cfg), b = mc_run(cfg), c = mc_run_serial(cfg);
  CHECK(a.mean == b.mean);
  CHECK(a.mean == c.mean);
  CHECK(a.variance == c.variance);
  double exact = moments(kThree, 10, 1).mean.to_double();
  CHECK(std::abs(a.mean - exact) < 4 * a.std_error);
  // one pivot binary search is plain quicksort
  auto one = mc_run({12, 1, 4000, 3});
  CHECK(std::abs(one.mean - moments(kNulla, 12, 1).mean.to_double()) < 4 * one.std_error);
}

TEST_CASE("comparison skewness drifts toward its limit") {
  auto s = scaled_moments(kNulla, 500, 3);
  CHECK(std::abs(s[0] / 0.8548818671325885 - 1) < 0.05);
}
