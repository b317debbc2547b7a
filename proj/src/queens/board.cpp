#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "expmath/queens/queens.hpp"

namespace expmath::queens {

namespace {

struct Hits {
  std::vector<char> row, col, sum, diff;
  explicit Hits(const BoardPlacement& p)
      : row(p.n, 0), col(p.n, 0), sum(2 * p.n, 0), diff(2 * p.n, 0) {
    for (int y = 0; y < p.n; ++y)
      for (int x = 0; x < p.n; ++x)
        if (p.at(x, y)) row[y] = col[x] = sum[x + y] = diff[y - x + p.n] = 1;
  }
  bool free(int x, int y, int n) const { return !row[y] && !col[x] && !sum[x + y] && !diff[y - x + n]; }
};

template <class T>
bool inside_convex(const Polygon<T>& poly, const T& px, const T& py, const T& eps) {
  if (polygon_area(poly) == T(0)) return false;
  int sign = 0;
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& u = poly[i];
    const auto& v = poly[(i + 1) % poly.size()];
    T cr = (v[0] - u[0]) * (py - u[1]) - (v[1] - u[1]) * (px - u[0]);
    int s = cr > eps ? 1 : (cr < -eps ? -1 : 0);
    if (s == 0) continue;
    if (sign == 0) sign = s;
    else if (s != sign) return false;
  }
  return true;
}

template <class T>
BoardPlacement raster(Family f, const std::vector<T>& params, int n, const T& eps) {
  if (n < 1) throw std::invalid_argument("rasterize: n >= 1");
  require_feasible(f, params);
  const auto polys = white_polygons(f, params);
  BoardPlacement b(n);
  for (int y = 0; y < n; ++y)
    for (int x = 0; x < n; ++x) {
      const T cx = T(2 * x + 1) / T(2 * n), cy = T(2 * y + 1) / T(2 * n);
      for (const auto& poly : polys)
        if (inside_convex(poly, cx, cy, eps)) {
          b.set(x, y);
          break;
        }
    }
  return b;
}

// ---- exhaustive search on n <= 5 via 32-bit boards ----

struct Small {
  int n, cells;
  std::vector<std::uint32_t> attack;  // row, column and both diagonals, including the cell
  std::vector<int> orbit_min;         // least index among the 8 images of a cell

  explicit Small(int n_) : n(n_), cells(n_ * n_), attack(cells, 0), orbit_min(cells, 0) {
    for (int a = 0; a < cells; ++a)
      for (int b = 0; b < cells; ++b) {
        int ax = a % n, ay = a / n, bx = b % n, by = b / n;
        if (ax == bx || ay == by || ax + ay == bx + by || ay - ax == by - bx) attack[a] |= 1u << b;
      }
    for (int c = 0; c < cells; ++c) {
      int x = c % n, y = c / n, best = c;
      for (int s = 0; s < 8; ++s) {
        int u = x, v = y;
        if (s & 1) u = n - 1 - u;
        if (s & 2) v = n - 1 - v;
        if (s & 4) std::swap(u, v);
        best = std::min(best, v * n + u);
      }
      orbit_min[c] = best;
    }
  }
};

void dfs(const Small& sm, const std::vector<int>& cand, std::size_t k, int w, std::uint32_t attacked,
         std::atomic<int>& best) {
  const int black = sm.cells - std::popcount(attacked);
  const int here = std::min(w, black);
  int cur = best.load(std::memory_order_relaxed);
  while (here > cur && !best.compare_exchange_weak(cur, here)) {
  }
  if (k == cand.size()) return;
  const int bound = std::min(w + static_cast<int>(cand.size() - k), black);
  if (bound <= best.load(std::memory_order_relaxed)) return;
  dfs(sm, cand, k + 1, w + 1, attacked | sm.attack[cand[k]], best);
  dfs(sm, cand, k + 1, w, attacked, best);
}

// Some image of every white set has least cell c = its own orbit minimum and
// no cell whose orbit minimum is below c; search only those sets.
void search_from(const Small& sm, int c, std::atomic<int>& best) {
  if (sm.orbit_min[c] != c) return;
  std::vector<int> cand;
  for (int j = c + 1; j < sm.cells; ++j)
    if (sm.orbit_min[j] >= c) cand.push_back(j);
  dfs(sm, cand, 0, 1, sm.attack[c], best);
}

void check_small(int n) {
  if (n < 1 || n > 5) throw std::invalid_argument("exhaustive_small: need 1 <= n <= 5");
}

}  // namespace

long discrete_black_count(const BoardPlacement& p) {
  Hits h(p);
  long count = 0;
  for (int y = 0; y < p.n; ++y)
    for (int x = 0; x < p.n; ++x) count += h.free(x, y, p.n);
  return count;
}

BoardPlacement black_cells(const BoardPlacement& p) {
  Hits h(p);
  BoardPlacement b(p.n);
  for (int y = 0; y < p.n; ++y)
    for (int x = 0; x < p.n; ++x)
      if (h.free(x, y, p.n)) b.set(x, y);
  return b;
}

BoardPlacement rasterize(Family f, const std::vector<Rational>& params, int n) {
  return raster<Rational>(f, params, n, Rational(0));
}

BoardPlacement rasterize(Family f, const std::vector<double>& params, int n) {
  return raster<double>(f, params, n, 1e-12);
}

int exhaustive_small(int n) {
  check_small(n);
  const Small sm(n);
  std::atomic<int> best{0};
#pragma omp parallel for schedule(dynamic, 1)
  for (int c = 0; c < sm.cells; ++c) search_from(sm, c, best);
  return best.load();
}

int exhaustive_small_serial(int n) {
  check_small(n);
  const Small sm(n);
  std::atomic<int> best{0};
  for (int c = 0; c < sm.cells; ++c) search_from(sm, c, best);
  return best.load();
}

std::string board_ascii(const BoardPlacement& p) {
  const auto black = black_cells(p);
  std::string s;
  for (int y = p.n - 1; y >= 0; --y) {
    for (int x = 0; x < p.n; ++x) s += p.at(x, y) ? 'W' : (black.at(x, y) ? 'B' : '.');
    s += '\n';
  }
  return s;
}

std::string board_csv(const BoardPlacement& p) {
  const auto black = black_cells(p);
  std::ostringstream os;
  os << "x,y,state\n";
  for (int y = 0; y < p.n; ++y)
    for (int x = 0; x < p.n; ++x)
      os << x << ',' << y << ',' << (p.at(x, y) ? "white" : (black.at(x, y) ? "black" : "empty")) << '\n';
  return os.str();
}

std::string outlines_csv(Family f, const std::vector<double>& params) {
  std::ostringstream os;
  os.precision(17);
  os << "region,polygon,vertex,x,y\n";
  auto emit = [&os](const char* region, const PolygonList<double>& polys) {
    for (std::size_t i = 0; i < polys.size(); ++i)
      for (std::size_t j = 0; j <= polys[i].size(); ++j) {  // closed polyline
        const auto& v = polys[i][j % polys[i].size()];
        os << region << ',' << i << ',' << j << ',' << v[0] << ',' << v[1] << '\n';
      }
  };
  emit("white", white_polygons(f, params));
  if (f == Family::JubinTwoPentagons) emit("black", pentagon_black_regions(params));
  return os.str();
}

}  // namespace expmath::queens
