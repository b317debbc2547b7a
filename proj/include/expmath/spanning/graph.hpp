#pragma once

#include <cstddef>
#include <vector>

#include "expmath/core/polynomial.hpp"
#include "expmath/linalg/matrix.hpp"

namespace expmath::spanning {

enum class EdgeTag { Horizontal, Vertical, Other };

struct Edge {
  std::size_t u, v;  // 1-based, u < v
  EdgeTag tag;
  friend bool operator==(const Edge&, const Edge&) = default;
};

struct Graph {
  std::size_t vertex_count = 0;
  std::vector<Edge> edges;

  // Adds {u,v}; rejects loops and duplicates.
  void add_edge(std::size_t u, std::size_t v, EdgeTag tag);
};

// G_k(n): v_{i,j} -> (j-1)k + i (column-major); vertical edges change i.
Graph grid_graph(std::size_t k, std::size_t n);
// n copies of G; edges inside a copy are tagged Other, edges between
// consecutive copies Horizontal. Vertex (layer j, x) -> (j-1)|G| + x.
Graph product_with_path(const Graph& g, std::size_t n);
Graph complete_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph path_graph(std::size_t n);

Matrix<Integer> laplacian(const Graph& g);
// Vertical edges weighted by v, all others by 1.
Matrix<Polynomial<Integer>> vertical_laplacian(const Graph& g);

// Matrix Tree Theorem cofactor; `drop` is the 1-based row/column removed.
Integer spanning_tree_count(const Graph& g, std::size_t drop = 0);
Integer two_forest_count(const Graph& g, std::size_t u, std::size_t v);

}  // namespace expmath::spanning
