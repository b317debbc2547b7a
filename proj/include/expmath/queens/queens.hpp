#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>
#include <vector>

#include "expmath/queens/geometry.hpp"

namespace expmath::queens {

// ---- continuous search -------------------------------------------------

enum class BlackModel {
  Geometric,  // exact sweep over the white polygons
  Formula,    // closed forms; meaningful only where they agree with the sweep
};

struct OptimizeOptions {
  int starts = 20;
  double tol = 1e-7;  // required |white - black| at the result
  std::uint64_t seed = 1;
  BlackModel model = BlackModel::Geometric;
};

struct OptimizeResult {
  std::vector<double> params;
  double white = 0, black = 0, value = 0;
  int feasible_starts = 0;
};

OptimizeResult optimize(Family f, const OptimizeOptions& opt = {});
OptimizeResult optimize_serial(Family f, const OptimizeOptions& opt = {});

struct VerifyReport {
  Real white, black, value;
  bool balanced = false;    // |white - black| <= 1e-12
  bool stationary = false;  // no feasible 1e-4 step improves min(white, black) by > 1e-9
  bool formula_matches_geometry = false;
  double best_gain = 0;  // largest improvement seen over the perturbation stencil
};

VerifyReport verify_candidate(Family f, const std::vector<Real>& params);

// ---- discrete board ----------------------------------------------------

struct BoardPlacement {
  int n = 0;
  boost::dynamic_bitset<> white;  // cell (col x, row y) at bit y*n + x
  explicit BoardPlacement(int n_ = 0) : n(n_), white(static_cast<std::size_t>(n_) * n_) {}
  bool at(int x, int y) const { return white[static_cast<std::size_t>(y) * n + x]; }
  void set(int x, int y, bool v = true) { white[static_cast<std::size_t>(y) * n + x] = v; }
  std::size_t count() const { return white.count(); }
};

// cells sharing no row, column or diagonal with any white cell
long discrete_black_count(const BoardPlacement& p);
BoardPlacement black_cells(const BoardPlacement& p);

// cell (x, y) is white iff its center ((x+1/2)/n, (y+1/2)/n) lies in a closed white polygon
BoardPlacement rasterize(Family f, const std::vector<Rational>& params, int n);
BoardPlacement rasterize(Family f, const std::vector<double>& params, int n);

// max over white sets of min(|W|, black count); n <= 5
int exhaustive_small(int n);
int exhaustive_small_serial(int n);

std::string board_ascii(const BoardPlacement& p);  // W white, B black, . attacked
std::string board_csv(const BoardPlacement& p);    // x,y,state
std::string outlines_csv(Family f, const std::vector<double>& params);  // region,polygon,vertex,x,y

}  // namespace expmath::queens
