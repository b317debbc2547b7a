#include <random>

#include "doctest.h"
#include "expmath/diagmat/diagmat.hpp"
#include "expmath/linalg/determinant.hpp"
#include "expmath/linalg/permanent.hpp"

using namespace expmath;
using namespace expmath::diagmat;

namespace {
std::vector<Rational> R(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}
const QRatFunc kExampleGF(qpoly({-1}), qpoly({-1, 2, -12, 45}));
}  // namespace

TEST_CASE("build_matrix") {
  auto m = build_matrix(DiagSpec{6, R({1, 2, 3}), R({1, 4})});
  for (std::size_t i = 0; i < 6; ++i) {
    CHECK(m(i, i) == Rational(1));
    if (i + 1 < 6) CHECK(m(i, i + 1) == Rational(2));
    if (i + 2 < 6) CHECK(m(i, i + 2) == Rational(3));
    if (i + 3 < 6) CHECK(m(i, i + 3) == Rational(0));
    if (i >= 1) CHECK(m(i, i - 1) == Rational(4));
    if (i >= 2) CHECK(m(i, i - 2) == Rational(0));
  }
  CHECK(build_matrix(DiagSpec{1, R({7}), R({7})}) == Matrix<Rational>{{7}});
  CHECK_THROWS(build_matrix(DiagSpec{3, R({1, 2}), R({2})}));
}

TEST_CASE("det_sequence") {
  auto d = det_sequence(R({2, 3}), R({2, 4, 5}), 1, 3);
  CHECK(d[0] == Rational(2));
  CHECK(d[1] == Rational(-8));
  CHECK(d[2] == determinant_cofactor(build_matrix(DiagSpec{3, R({2, 3}), R({2, 4, 5})})));
  CHECK(det_sequence(R({1}), R({1}), 1, 5) == R({1, 1, 1, 1, 1}));
  CHECK(det_sequence(R({2, 3}), R({2, 4, 5}), 4, 4).size() == 1);
  CHECK(det_sequence(R({2, 3}), R({2, 4, 5}), 1, 15) == det_sequence_serial(R({2, 3}), R({2, 4, 5}), 1, 15));
}

TEST_CASE("perm_sequence matches Ryser") {
  auto p = perm_sequence(R({2, 3}), R({2, 4, 5}), 1, 12);
  for (std::size_t d = 1; d <= 12; ++d)
    CHECK(p[d - 1] == permanent(build_matrix(DiagSpec{d, R({2, 3}), R({2, 4, 5})})));
  auto q = perm_sequence(R({1, -2, 3}), R({1, 2}), 1, 7);
  for (std::size_t d = 1; d <= 7; ++d)
    CHECK(q[d - 1] == permanent_bruteforce(build_matrix(DiagSpec{d, R({1, -2, 3}), R({1, 2})})));
}

TEST_CASE("gf_family") {
  CHECK(gf_family(R({2, 3}), R({2, 4, 5}), Mode::Det, 10, 50) == kExampleGF);
  CHECK(gf_family(R({1}), R({1}), Mode::Det, 1, 10) == QRatFunc(qpoly({1}), qpoly({1, -1})));
  auto pf = gf_family(R({2, 3}), R({2, 4, 5}), Mode::Perm, 10, 40);
  auto s = series_coeffs(pf, 15);
  for (std::size_t d = 1; d <= 14; ++d)
    CHECK(s[d] == permanent(build_matrix(DiagSpec{d, R({2, 3}), R({2, 4, 5})})));
}

TEST_CASE("expand_minor is a valid cofactor step") {
  DiagSpec spec{20, R({2, 3}), R({2, 4, 5})};
  auto root = root_state(spec);
  auto ex = expand_minor(spec, root);
  CHECK(ex.size() == 2);
  for (const auto& s : children_closure(spec)) {
    for (std::size_t m = spec.row.size(); m <= 8; ++m) {
      Rational acc(0);
      for (const auto& e : expand_minor(spec, s)) acc += e.multiplier * determinant(materialize(spec, e.child, m - 1));
      CHECK(acc == determinant(materialize(spec, s, m)));
    }
  }
  DiagSpec one{5, R({4}), R({4})};
  auto e1 = expand_minor(one, root_state(one));
  REQUIRE(e1.size() == 1);
  CHECK(e1[0].multiplier == Rational(4));
  CHECK(children_closure(one).size() == 1);
  DiagSpec zero{5, R({0, 0}), R({0})};
  CHECK(expand_minor(zero, root_state(zero)).empty());
}

TEST_CASE("gf_symbolic") {
  CHECK(gf_symbolic(R({2, 3}), R({2, 4, 5}), Mode::Det) == kExampleGF);
  CHECK(gf_symbolic(R({1}), R({1}), Mode::Det) == QRatFunc(qpoly({1}), qpoly({1, -1})));
  CHECK(children_closure(DiagSpec{10, R({1, 1}), R({1})}).size() == 1);
}

TEST_CASE("symbolic DP agrees with guessing on random specs") {
  std::mt19937_64 gen(99);
  std::uniform_int_distribution<int> ent(-3, 3), len(1, 3);
  int tested = 0;
  while (tested < 10) {
    std::vector<Rational> row, col;
    int k1 = len(gen), k2 = len(gen);
    for (int i = 0; i < k1; ++i) row.emplace_back(ent(gen));
    for (int i = 0; i < k2; ++i) col.emplace_back(ent(gen));
    col[0] = row[0];
    if (row.back().is_zero() || col.back().is_zero()) continue;
    for (Mode mode : {Mode::Det, Mode::Perm}) {
      auto sym = gf_symbolic(row, col, mode);
      auto seq = mode == Mode::Det ? det_sequence(row, col, 1, 12) : perm_sequence(row, col, 1, 12);
      auto s = series_coeffs(sym, 13);
      for (std::size_t d = 1; d <= 12; ++d) CHECK(s[d] == seq[d - 1]);
      CHECK(gf_family(row, col, mode, 1, 30) == sym);
    }
    ++tested;
  }
}
