#include <random>

#include "doctest.h"
#include "expmath/spanning/grid.hpp"

using namespace expmath;
using namespace expmath::spanning;

namespace {
QPoly vpoly(std::initializer_list<long> c) { return qpoly(c); }
}  // namespace

TEST_CASE("grid construction") {
  Graph g = grid_graph(2, 2);
  CHECK(g.vertex_count == 4);
  CHECK(g.edges.size() == 4);
  int vert = 0;
  for (auto& e : g.edges) vert += e.tag == EdgeTag::Vertical;
  CHECK(vert == 2);
  Graph p = grid_graph(1, 5);
  CHECK(p.edges.size() == 4);
  for (auto& e : p.edges) CHECK(e.tag == EdgeTag::Horizontal);
  Graph c = grid_graph(3, 1);
  CHECK(c.edges.size() == 2);
  for (auto& e : c.edges) CHECK(e.tag == EdgeTag::Vertical);
}

TEST_CASE("product with a path") {
  Graph k2 = path_graph(2);
  for (std::size_t n = 1; n <= 5; ++n) {
    auto a = product_with_path(k2, n), b = grid_graph(2, n);
    auto key = [](const Graph& g) {
      std::vector<std::pair<std::size_t, std::size_t>> e;
      for (auto& x : g.edges) e.emplace_back(x.u, x.v);
      std::sort(e.begin(), e.end());
      return e;
    };
    CHECK(key(a) == key(b));
  }
  CHECK(product_with_path(cycle_graph(3), 1).edges == cycle_graph(3).edges);
  auto t2 = product_with_path(cycle_graph(3), 2);
  CHECK(t2.vertex_count == 6);
  CHECK(t2.edges.size() == 9);
}

TEST_CASE("spanning tree counts") {
  CHECK(spanning_tree_count(grid_graph(2, 3)) == 15);
  CHECK(spanning_tree_count(grid_graph(2, 2)) == 4);
  CHECK(spanning_tree_count(path_graph(6)) == 1);
  CHECK(spanning_tree_count(complete_graph(4)) == 16);
  Graph two;
  two.vertex_count = 4;
  two.add_edge(1, 2, EdgeTag::Other);
  two.add_edge(3, 4, EdgeTag::Other);
  CHECK(spanning_tree_count(two) == 0);
  CHECK_THROWS(two.add_edge(2, 1, EdgeTag::Other));
  CHECK_THROWS(two.add_edge(3, 3, EdgeTag::Other));
}

TEST_CASE("cofactor choice does not matter") {
  std::mt19937_64 gen(1);
  for (int it = 0; it < 10; ++it) {
    Graph g;
    g.vertex_count = 7;
    std::bernoulli_distribution coin(0.5);
    for (std::size_t u = 1; u <= 7; ++u)
      for (std::size_t v = u + 1; v <= 7; ++v)
        if (coin(gen)) g.add_edge(u, v, EdgeTag::Other);
    Integer ref = spanning_tree_count(g, 1);
    for (std::size_t d = 2; d <= 7; ++d) CHECK(spanning_tree_count(g, d) == ref);
  }
}

TEST_CASE("two-component forests and resistance") {
  CHECK(two_forest_count(cycle_graph(4), 1, 3) == 4);
  CHECK(two_forest_count(path_graph(2), 1, 2) == 1);
  CHECK(two_forest_count(path_graph(3), 1, 3) == 2);
  CHECK_THROWS(two_forest_count(path_graph(3), 2, 2));
  CHECK(joint_resistance(1, 2) == Rational(1));
  CHECK(joint_resistance(2, 2) == Rational(1));
  Rational r = joint_resistance(2, 50);
  CHECK(r >= Rational(49) / Rational(2));
  CHECK(r <= Rational(49) / Rational(2) + doyle_constant(2));
  CHECK(doyle_constant(2) == Rational(1) / Rational(2));
}

TEST_CASE("parallel counts match serial") {
  CHECK(spanning_counts(3, 1, 12) == spanning_counts_serial(3, 1, 12));
}

TEST_CASE("grid generating functions") {
  CHECK(gf_spanning_grid(1).gf == QRatFunc(vpoly({0, 1}), vpoly({1, -1})));
  CHECK(gf_spanning_grid(2).gf == QRatFunc(vpoly({0, 1}), vpoly({1, -4, 1})));
  auto f3 = gf_spanning_grid(3);
  CHECK(f3.gf == QRatFunc(vpoly({0, 1, 0, -1}), vpoly({1, -15, 32, -15, 1})));
  auto s = series_coeffs(f3.gf, 11);
  auto direct = spanning_counts_serial(3, 1, 10);
  for (std::size_t n = 1; n <= 10; ++n) CHECK(s[n] == Rational(direct[n - 1]));
}

TEST_CASE("two-forest generating functions") {
  CHECK(gf_two_forest_grid(1) == QRatFunc(vpoly({0, 0, 1}), vpoly({1, -2, 1})));
  auto s2 = gf_two_forest_grid(2);
  auto d = vpoly({1, -4, 1});
  auto bound = d * d * vpoly({-1, 1});
  CHECK(divrem(bound, s2.denom()).second.zero());
}

TEST_CASE("vertical edge weights") {
  CHECK(vertical_weighted_count(2, 2) == vpoly({0, 2, 2}));
  CHECK(vertical_weighted_count(1, 6) == vpoly({1}));
  CHECK(vertical_weighted_count(2, 1) == vpoly({0, 1}));
  for (std::size_t k = 1; k <= 4; ++k)
    for (std::size_t n = 1; n <= 6; ++n)
      CHECK(vertical_weighted_count(k, n).eval(Rational(1)) == Rational(spanning_tree_count(grid_graph(k, n))));
}

TEST_CASE("ver_gf for k = 2") {
  auto g = ver_gf(2);
  BivariateGF expect{Polynomial<QPoly>(std::vector<QPoly>{QPoly(), vpoly({0, 1})}),
                     Polynomial<QPoly>(std::vector<QPoly>{vpoly({1}), vpoly({-2, -2}), vpoly({1})})};
  CHECK(g.equivalent(expect));
  CHECK(g.denom[0] == vpoly({1}));
  CHECK(g.at_v(Rational(1)) == gf_spanning_grid(2).gf);
}
