#include <doctest.h>

#include <cmath>

#include "expmath/queens/queens.hpp"

using namespace expmath;
using namespace expmath::queens;

namespace {

std::vector<Rational> jubin() {
  return {Rational(1, 4), Rational(1, 3), Rational(1, 4), Rational(1, 6), Rational(1, 12), Rational(1, 12), Rational(1, 2)};
}

Real sqrtR(int x) { return sqrt(Real(x)); }

// Attack test straight from the definition, one pair of cells at a time.
long naive_black(const BoardPlacement& p) {
  long c = 0;
  for (int y = 0; y < p.n; ++y)
    for (int x = 0; x < p.n; ++x) {
      bool ok = true;
      for (int v = 0; v < p.n && ok; ++v)
        for (int u = 0; u < p.n && ok; ++u)
          if (p.at(u, v) && (u == x || v == y || u + v == x + y || v - u == y - x)) ok = false;
      c += ok;
    }
  return c;
}

// Brute force over all white subsets.
int naive_peaceable(int n) {
  int best = 0;
  for (std::uint32_t m = 0; m < (1u << (n * n)); ++m) {
    BoardPlacement b(n);
    for (int i = 0; i < n * n; ++i)
      if (m >> i & 1) b.set(i % n, i / n);
    best = std::max<int>(best, std::min<long>(std::popcount(m), naive_black(b)));
  }
  return best;
}

}  // namespace

TEST_CASE("family names") {
  for (const auto& i : families()) CHECK(parse_family(i.name) == i.family);
  CHECK_THROWS(parse_family("octagon"));
}

TEST_CASE("two-pentagon construction is exact") {
  auto a = areas(Family::JubinTwoPentagons, jubin());
  CHECK(a.white == Rational(7, 48));
  CHECK(a.black == Rational(7, 48));
  CHECK(a.geometric_black == Rational(7, 48));
  CHECK(a.in_window);
  CHECK(white_area(Family::JubinTwoPentagons, jubin()) == Rational(7, 48));

  auto b = pentagon_black_regions(jubin());
  using V = Vertex<Rational>;
  CHECK(b[0] == Polygon<Rational>{V{Rational(1, 2), 1}, V{Rational(1, 4), 1}, V{Rational(1, 4), Rational(3, 4)},
                                  V{Rational(1, 3), Rational(2, 3)}, V{Rational(1, 2), Rational(5, 6)}});
  CHECK(b[1] == Polygon<Rational>{V{1, 1}, V{Rational(3, 4), Rational(3, 4)}, V{Rational(3, 4), Rational(1, 2)},
                                  V{Rational(5, 6), Rational(1, 2)}, V{1, Rational(2, 3)}});
  CHECK(polygon_area(b[0]) + polygon_area(b[1]) == Rational(7, 48));

  auto bad = jubin();
  bad[6] = Rational(4, 5);  // g + c > 1
  CHECK_THROWS_WITH_AS(pentagon_black_regions(bad), doctest::Contains("g+c <= 1"), Infeasible);
}

TEST_CASE("single components") {
  auto r = areas(Family::Rectangle, std::vector<Rational>{Rational(1, 3), Rational(1, 3)});
  CHECK(r.white == Rational(1, 9));
  CHECK(r.black == Rational(1, 9));
  auto t = areas(Family::Triangle, std::vector<Rational>{Rational(1, 2)});
  CHECK(t.white == Rational(1, 8));
  CHECK(t.black == Rational(1, 8));
  for (auto [a, b] : {std::pair{Rational(1, 5), Rational(1, 2)}, {Rational(1, 10), Rational(3, 10)}, {Rational(2, 5), Rational(9, 20)}}) {
    auto x = areas(Family::Rectangle, std::vector<Rational>{a, b});
    auto y = areas(Family::Rectangle, std::vector<Rational>{b, a});
    CHECK(x.white == y.white);
    CHECK(x.black == y.black);
  }
  // away from the optimum the triangle formula no longer describes the board
  CHECK_FALSE(areas(Family::Triangle, std::vector<double>{0.3}).in_window);
}

TEST_CASE("closed forms agree with the sweep near the optima") {
  struct Case {
    Family f;
    std::vector<double> p;
  };
  const double h = (3 - std::sqrt(3.0)) / 6, q = 2.0 / 11 * (8 - std::sqrt(42.0));
  for (const auto& c : std::vector<Case>{{Family::Hexagon, {h, h, h, h}},
                                         {Family::TwoSquares, {0.2371711193, 0.6053101598}},
                                         {Family::TwoSquares, {0.23, 0.5}},
                                         {Family::TwoTrianglesSame, {(3 - std::sqrt(3.0)) / 4, 0.5}},
                                         {Family::TwoTrianglesSame, {0.31, 0.4}},
                                         {Family::TwoTrianglesOpposite, {1 / std::sqrt(8.0)}},
                                         {Family::SquarePlusTriangle, {q, (4 - q) / 7}},
                                         {Family::SquarePlusTriangle, {0.27, 0.6}}}) {
    auto a = areas(c.f, c.p);
    CHECK(a.in_window);
    CHECK(a.black == doctest::Approx(a.geometric_black).epsilon(1e-12));
  }
}

TEST_CASE("surd optima") {
  auto hex = verify_candidate(Family::Hexagon, std::vector<Real>(4, (Real(3) - sqrtR(3)) / 6));
  CHECK(hex.balanced);
  CHECK(hex.stationary);
  CHECK(abs(hex.value - (Real(2) - sqrtR(3)) / 2) < Real(1e-30));

  const Real a2 = (Real(19) - sqrtR(217)) / 18, s2 = Real(13) / 18 - sqrtR(217) / 126;
  auto sq = verify_candidate(Family::TwoSquares, {a2, s2});
  CHECK(sq.balanced);
  CHECK(sq.stationary);
  CHECK(abs(sq.value - (Real(289) / 81 - Real(19) * sqrtR(217) / 81)) < Real(1e-30));

  auto tri = verify_candidate(Family::TwoTrianglesSame, {(Real(3) - sqrtR(3)) / 4, Real(1) / 2});
  CHECK(tri.balanced);
  CHECK(tri.stationary);
  CHECK(abs(tri.value - (Real(3) / 4 - Real(3) * sqrtR(3) / 8)) < Real(1e-30));

  const Real a3 = Real(2) / 11 * (Real(8) - sqrtR(42));
  auto st = verify_candidate(Family::SquarePlusTriangle, {a3, (Real(4) - a3) / 7});
  CHECK(st.balanced);
  CHECK(st.stationary);
  CHECK(st.formula_matches_geometry);
  CHECK(abs(st.value - (Real(636) / 121 - Real(96) * sqrtR(42) / 121)) < Real(1e-30));
}

TEST_CASE("optimizer") {
  OptimizeOptions o;
  o.starts = 8;
  auto r = optimize(Family::Rectangle, o);
  CHECK(r.value == doctest::Approx(1.0 / 9).epsilon(1e-9));
  CHECK(std::abs(r.white - r.black) <= o.tol);
  auto t = optimize(Family::Triangle, o);
  CHECK(t.params[0] == doctest::Approx(0.5).epsilon(1e-6));
  auto s1 = optimize(Family::TwoTrianglesOpposite, o), s2 = optimize_serial(Family::TwoTrianglesOpposite, o);
  CHECK(s1.params == s2.params);
  CHECK(s1.value == doctest::Approx(0.125).epsilon(1e-9));
  CHECK_FALSE(violated(Family::TwoTrianglesOpposite, s1.params));
}

TEST_CASE("discrete board") {
  BoardPlacement empty(5);
  CHECK(discrete_black_count(empty) == 25);
  BoardPlacement corner(8);
  corner.set(0, 0);
  CHECK(discrete_black_count(corner) == 42);
  BoardPlacement full(4);
  full.white.set();
  CHECK(discrete_black_count(full) == 0);
  BoardPlacement mixed(7);
  for (auto [x, y] : {std::pair{1, 2}, {5, 5}, {3, 0}}) mixed.set(x, y);
  CHECK(discrete_black_count(mixed) == naive_black(mixed));
}

TEST_CASE("exhaustive search") {
  CHECK(exhaustive_small(3) == 1);
  CHECK(exhaustive_small(4) == 2);
  CHECK(exhaustive_small(5) == 4);
  for (int n = 1; n <= 4; ++n) {
    CHECK(exhaustive_small(n) == naive_peaceable(n));
    CHECK(exhaustive_small_serial(n) == exhaustive_small(n));
  }
  CHECK_THROWS(exhaustive_small(6));
}

TEST_CASE("rasterization") {
  auto r = rasterize(Family::Rectangle, std::vector<Rational>{Rational(1, 3), Rational(1, 3)}, 99);
  CHECK(r.count() == 1089);
  auto t = rasterize(Family::Triangle, std::vector<double>{0.5}, 100);
  CHECK(std::abs(static_cast<double>(t.count()) - 1250.0) <= 200);
  auto j = rasterize(Family::JubinTwoPentagons, jubin(), 48);
  CHECK(std::min<long>(j.count(), discrete_black_count(j)) >= 302);

  // continuous areas versus boards at n = 200
  const double h = (3 - std::sqrt(3.0)) / 6;
  for (auto [f, p] : {std::pair{Family::Hexagon, std::vector<double>{h, h, h, h}},
                      {Family::TwoSquares, {0.2371711193, 0.6053101598}},
                      {Family::TwoTrianglesOpposite, {1 / std::sqrt(8.0)}}}) {
    auto b = rasterize(f, p, 200);
    auto a = areas(f, p);
    CHECK(std::abs(b.count() / 40000.0 - a.white) <= 3.0 / 200);
    CHECK(std::abs(discrete_black_count(b) / 40000.0 - a.geometric_black) <= 3.0 / 200);
  }
  auto csv = outlines_csv(Family::JubinTwoPentagons, {0.25, 1 / 3.0, 0.25, 1 / 6.0, 1 / 12.0, 1 / 12.0, 0.5});
  CHECK(csv.find("black,1,0,1,1") != std::string::npos);
}

namespace {

using VR = Vertex<Rational>;
int orient(const VR& a, const VR& b, const VR& c) {
  Rational cr = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0]);
  return cr.sign();
}
bool proper_cross(const VR& a, const VR& b, const VR& c, const VR& d) {
  return orient(a, b, c) * orient(a, b, d) < 0 && orient(c, d, a) * orient(c, d, b) < 0;
}
bool strictly_inside(const Polygon<Rational>& poly, const VR& p) {
  int sign = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    int s = orient(poly[i], poly[(i + 1) % poly.size()], p);
    if (s == 0) return false;
    if (sign == 0) sign = s;
    if (s != sign) return false;
  }
  return true;
}
VR centroid(const Polygon<Rational>& poly) {
  VR c{0, 0};
  for (const auto& v : poly) {
    c[0] += v[0];
    c[1] += v[1];
  }
  Rational k(static_cast<long>(poly.size()));
  return {c[0] / k, c[1] / k};
}

}  // namespace

TEST_CASE("black pentagons are disjoint from white and each other") {
  PolygonList<Rational> all = white_polygons(Family::JubinTwoPentagons, jubin());
  for (auto& p : pentagon_black_regions(jubin())) all.push_back(p);
  for (std::size_t i = 0; i < all.size(); ++i)
    for (std::size_t j = i + 1; j < all.size(); ++j) {
      CHECK_FALSE(strictly_inside(all[i], centroid(all[j])));
      CHECK_FALSE(strictly_inside(all[j], centroid(all[i])));
      for (std::size_t a = 0; a < all[i].size(); ++a)
        for (std::size_t b = 0; b < all[j].size(); ++b)
          CHECK_FALSE(proper_cross(all[i][a], all[i][(a + 1) % all[i].size()], all[j][b],
                                   all[j][(b + 1) % all[j].size()]));
    }
}
