#include "expmath/spanning/graph.hpp"

#include <algorithm>
#include <stdexcept>

#include "expmath/linalg/determinant.hpp"

namespace expmath::spanning {

void Graph::add_edge(std::size_t u, std::size_t v, EdgeTag tag) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (u > v) std::swap(u, v);
  if (v > vertex_count || u == 0) throw std::out_of_range("vertex label out of range");
  for (const auto& e : edges)
    if (e.u == u && e.v == v) throw std::invalid_argument("duplicate edge");
  edges.push_back({u, v, tag});
}

Graph grid_graph(std::size_t k, std::size_t n) {
  if (k == 0 || n == 0) throw std::invalid_argument("grid_graph: k, n >= 1");
  Graph g;
  g.vertex_count = k * n;
  auto id = [k](std::size_t i, std::size_t j) { return (j - 1) * k + i; };
  for (std::size_t j = 1; j <= n; ++j)
    for (std::size_t i = 1; i <= k; ++i) {
      if (i < k) g.edges.push_back({id(i, j), id(i + 1, j), EdgeTag::Vertical});
      if (j < n) g.edges.push_back({id(i, j), id(i, j + 1), EdgeTag::Horizontal});
    }
  return g;
}

Graph product_with_path(const Graph& base, std::size_t n) {
  if (n == 0) throw std::invalid_argument("product_with_path: n >= 1");
  const std::size_t m = base.vertex_count;
  Graph g;
  g.vertex_count = m * n;
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& e : base.edges)
      g.edges.push_back({j * m + e.u, j * m + e.v, n == 1 ? e.tag : EdgeTag::Other});
    if (j + 1 < n)
      for (std::size_t x = 1; x <= m; ++x) g.edges.push_back({j * m + x, (j + 1) * m + x, EdgeTag::Horizontal});
  }
  return g;
}

Graph complete_graph(std::size_t n) {
  Graph g;
  g.vertex_count = n;
  for (std::size_t u = 1; u <= n; ++u)
    for (std::size_t v = u + 1; v <= n; ++v) g.edges.push_back({u, v, EdgeTag::Other});
  return g;
}

Graph cycle_graph(std::size_t n) {
  Graph g = path_graph(n);
  if (n >= 3) g.add_edge(1, n, EdgeTag::Other);
  return g;
}

Graph path_graph(std::size_t n) {
  Graph g;
  g.vertex_count = n;
  for (std::size_t u = 1; u < n; ++u) g.edges.push_back({u, u + 1, EdgeTag::Other});
  return g;
}

Matrix<Integer> laplacian(const Graph& g) {
  Matrix<Integer> l(g.vertex_count, g.vertex_count);
  for (const auto& e : g.edges) {
    std::size_t a = e.u - 1, b = e.v - 1;
    l(a, a) += 1;
    l(b, b) += 1;
    l(a, b) -= 1;
    l(b, a) -= 1;
  }
  return l;
}

Matrix<Polynomial<Integer>> vertical_laplacian(const Graph& g) {
  using ZP = Polynomial<Integer>;
  const ZP one(Integer(1)), v = ZP::monomial(Integer(1), 1);
  Matrix<ZP> l(g.vertex_count, g.vertex_count);
  for (const auto& e : g.edges) {
    const ZP& w = e.tag == EdgeTag::Vertical ? v : one;
    std::size_t a = e.u - 1, b = e.v - 1;
    l(a, a) += w;
    l(b, b) += w;
    l(a, b) -= w;
    l(b, a) -= w;
  }
  return l;
}

Integer spanning_tree_count(const Graph& g, std::size_t drop) {
  if (g.vertex_count == 0) return 0;
  if (drop == 0) drop = g.vertex_count;
  return determinant(laplacian(g).minor(drop - 1, drop - 1));
}

Integer two_forest_count(const Graph& g, std::size_t u, std::size_t v) {
  if (u == v) throw std::invalid_argument("two_forest_count: terminals must differ");
  if (u > v) std::swap(u, v);
  auto m = laplacian(g).minor(v - 1, v - 1).minor(u - 1, u - 1);
  return determinant(m);
}

}  // namespace expmath::spanning
