#include <random>

#include "doctest.h"
#include "expmath/guess/ansatz.hpp"
#include "expmath/guess/cfinite.hpp"
#include "expmath/guess/holonomic.hpp"

using namespace expmath;

namespace {
std::vector<Rational> R(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}
const std::vector<Rational> kGrid2 = R({1, 4, 15, 56, 209, 780, 2911, 10864, 40545, 151316});
}  // namespace

TEST_CASE("guess_rec1") {
  auto s = guess_rec1(R({1, 1, 1, 1, 1, 1}), 1);
  REQUIRE(s);
  CHECK(s->initial == R({1}));
  CHECK(s->coeffs == R({1}));
  auto s2 = guess_rec1(kGrid2, 2);
  REQUIRE(s2);
  CHECK(s2->initial == R({1, 4}));
  CHECK(s2->coeffs == R({4, -1}));
  CHECK_FALSE(guess_rec1(R({1, 2, 4, 8, 16, 17, 1}), 1));
  CHECK_THROWS_AS(guess_rec1(R({1, 2, 3, 4}), 1), InsufficientData);
}

TEST_CASE("guess_rec picks minimal order") {
  auto fib = guess_rec(R({1, 1, 2, 3, 5, 8, 13, 21}));
  REQUIRE(fib);
  CHECK(fib->coeffs == R({1, 1}));
  CHECK(fib->initial == R({1, 1}));
  auto geo = guess_rec(R({1, 2, 4, 8, 16, 32, 64, 128}));
  REQUIRE(geo);
  CHECK(geo->coeffs == R({2}));
  CHECK(guess_rec(kGrid2)->coeffs == R({4, -1}));
  // palindromic shortcut agrees
  auto sym = guess_rec(kGrid2, true);
  REQUIRE(sym);
  CHECK(sym->coeffs == R({4, -1}));
}

TEST_CASE("seq_from_rec") {
  CFiniteSpec<Rational> s{R({1, 4}), R({4, -1})};
  CHECK(seq_from_rec(s, 6) == R({1, 4, 15, 56, 209, 780}));
  CHECK(seq_from_rec(CFiniteSpec<Rational>{R({1}), R({1})}, 4) == R({1, 1, 1, 1}));
  CHECK(seq_from_rec(CFiniteSpec<Rational>{R({0, 1}), R({1, 1})}, 7) == R({0, 1, 1, 2, 3, 5, 8}));
}

TEST_CASE("c_to_r") {
  auto f = c_to_r(CFiniteSpec<Rational>{R({1, 1}), R({1, 1})});
  REQUIRE(f);
  CHECK(*f == QRatFunc(qpoly({1}), qpoly({1, -1, -1})));
  auto g = c_to_r(CFiniteSpec<Rational>{R({1, 4}), R({4, -1})}, 1);
  REQUIRE(g);
  CHECK(*g == QRatFunc(qpoly({0, 1}), qpoly({1, -4, 1})));
  auto c = c_to_r(CFiniteSpec<Rational>{R({7}), R({1})});
  CHECK(*c == QRatFunc(qpoly({7}), qpoly({1, -1})));
}

TEST_CASE("round trip through the guesser") {
  std::mt19937_64 gen(2024);
  std::uniform_int_distribution<int> coef(-3, 3), init(-5, 5), ord(1, 5);
  int checked = 0;
  for (int it = 0; it < 60; ++it) {
    std::size_t d = static_cast<std::size_t>(ord(gen));
    CFiniteSpec<Rational> s;
    for (std::size_t i = 0; i < d; ++i) {
      s.coeffs.emplace_back(coef(gen));
      s.initial.emplace_back(init(gen));
    }
    if (s.coeffs.back().is_zero()) s.coeffs.back() = Rational(1);
    if (s.initial.back().is_zero()) s.initial.back() = Rational(1);  // avoid the zero sequence
    auto seq = seq_from_rec(s, 2 * d + 5);
    auto g = guess_rec(seq);
    if (!g) {
      std::string dump;
      for (auto& x : seq) dump += x.str() + " ";
      FAIL("no guess for " << dump);
    }
    CHECK(seq_from_rec(*g, 4 * d + 10) == seq_from_rec(s, 4 * d + 10));
    auto f = c_to_r(*g);
    REQUIRE(f);
    CHECK(series_coeffs(*f, seq.size()) == seq);
    ++checked;
  }
  CHECK(checked == 60);
}

TEST_CASE("find_rec") {
  std::vector<Rational> fac;
  Integer f = 1;
  for (long n = 0; n <= 12; ++n) {
    if (n > 0) f *= n;
    fac.emplace_back(f);
  }
  auto r = find_rec(fac, 3);
  REQUIRE(r);
  CHECK(r->order == 1);
  // (n+1)a(n) - a(n+1) up to sign: leading poly is positive constant
  CHECK(r->coeff_polys[1] == qpoly({1}));
  CHECK(r->coeff_polys[0] == qpoly({-1, -1}));
  for (long n = 0; n + 1 < 13; ++n) CHECK(apply_recurrence(*r, fac, 0, n).is_zero());

  // the grid sequence has no order-1 operator of small degree; order 2 constants win
  std::vector<Rational> g = kGrid2;
  for (int i = 0; i < 6; ++i) g.push_back(4 * g[g.size() - 1] - g[g.size() - 2]);
  auto rg = find_rec(g, 4);
  REQUIRE(rg);
  CHECK(rg->order == 2);
  CHECK(rg->coeff_polys[0] == qpoly({1}));
  CHECK(rg->coeff_polys[1] == qpoly({-4}));
  CHECK(rg->coeff_polys[2] == qpoly({1}));

  CHECK_THROWS_AS(find_rec(R({1, 2, 3}), 3), InsufficientData);
}

TEST_CASE("ansatz_fit") {
  AnsatzData data;
  for (long n = 1; n <= 10; ++n) data.push_back({{n, 0}, Rational(5)});
  AnsatzBasis b = AnsatzBasis::from({{0, 0, {}, 0}, {1, 0, {}, 0}});
  auto c = ansatz_fit(data, b);
  REQUIRE(c);
  CHECK(*c == R({5, 0}));

  AnsatzData h;
  for (long n = 1; n <= 12; ++n)
    h.push_back({{n, 0}, Rational(2) * Rational(n + 1) * harmonic(n) - Rational(4 * n)});
  AnsatzBasis hb = AnsatzBasis::from({{0, 0, {0}, 0}, {1, 0, {0}, 0}, {0, 0, {1}, 0}, {1, 0, {1}, 0}});
  auto hc = ansatz_fit(h, hb);
  REQUIRE(hc);
  CHECK(*hc == R({0, -4, 2, 2}));

  // inconsistent: data off the span
  AnsatzData bad = data;
  bad.back().second = Rational(6);
  CHECK_FALSE(ansatz_fit(bad, b));
  CHECK(AnsatzBasis::harmonic_default(2).terms.size() == 4 * 6);
}
