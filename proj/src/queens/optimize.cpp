#include <gsl/gsl_multimin.h>

#include <algorithm>
#include <cmath>
#include <random>

#include "expmath/queens/queens.hpp"

namespace expmath::queens {

namespace {

struct Problem {
  Family family;
  BlackModel model;
  std::size_t dim;
};

double violation(Family f, const std::vector<double>& p) {
  double v = 0;
  for (const auto& c : constraints(f, p))
    if (c.slack < 0) v -= c.slack;
  return v;
}

std::pair<double, double> white_black(const Problem& pr, const std::vector<double>& p) {
  auto a = areas(pr.family, p);
  return {a.white, pr.model == BlackModel::Formula ? a.black : a.geometric_black};
}

// Minimized: infeasible points sit above every feasible value.
double objective(const gsl_vector* x, void* data) {
  const auto& pr = *static_cast<const Problem*>(data);
  std::vector<double> p(pr.dim);
  for (std::size_t i = 0; i < pr.dim; ++i) p[i] = gsl_vector_get(x, i);
  if (double v = violation(pr.family, p); v > 0) return 1.0 + v;
  auto [w, b] = white_black(pr, p);
  return -std::min(w, b);
}

double objective_at(const Problem& pr, const std::vector<double>& p) {
  gsl_vector_const_view v = gsl_vector_const_view_array(p.data(), p.size());
  return objective(&v.vector, const_cast<Problem*>(&pr));
}

std::vector<double> nelder_mead(const Problem& pr, std::vector<double> x0, double step) {
  gsl_multimin_function fn{&objective, pr.dim, const_cast<Problem*>(&pr)};
  gsl_vector* x = gsl_vector_alloc(pr.dim);
  gsl_vector* ss = gsl_vector_alloc(pr.dim);
  for (std::size_t i = 0; i < pr.dim; ++i) gsl_vector_set(x, i, x0[i]);
  gsl_vector_set_all(ss, step);
  gsl_multimin_fminimizer* m = gsl_multimin_fminimizer_alloc(gsl_multimin_fminimizer_nmsimplex2, pr.dim);
  gsl_multimin_fminimizer_set(m, &fn, x, ss);
  for (int it = 0; it < 20000; ++it) {
    if (gsl_multimin_fminimizer_iterate(m)) break;
    if (gsl_multimin_test_size(gsl_multimin_fminimizer_size(m), 1e-13) == GSL_SUCCESS) break;
  }
  std::vector<double> out(pr.dim);
  for (std::size_t i = 0; i < pr.dim; ++i) out[i] = gsl_vector_get(m->x, i);
  gsl_multimin_fminimizer_free(m);
  gsl_vector_free(ss);
  gsl_vector_free(x);
  return out;
}

// One start: random feasible point, then Nelder-Mead with shrinking restarts.
std::optional<OptimizeResult> run_start(const Problem& pr, const OptimizeOptions& opt, int start) {
  std::seed_seq seq{static_cast<std::uint32_t>(opt.seed), static_cast<std::uint32_t>(opt.seed >> 32),
                    static_cast<std::uint32_t>(start)};
  std::mt19937_64 g(seq);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> x(pr.dim);
  bool found = false;
  for (int tries = 0; tries < 200000 && !found; ++tries) {
    for (auto& v : x) v = u(g);
    found = violation(pr.family, x) == 0;
  }
  if (!found) return std::nullopt;
  // The objective has a crease along white = black, so restart the simplex until it stops moving.
  double prev = objective_at(pr, x);
  for (double step : {0.05, 0.01}) x = nelder_mead(pr, x, step);
  for (int cycle = 0; cycle < 6; ++cycle) {
    for (double step : {1e-3, 1e-4, 1e-5, 1e-6}) x = nelder_mead(pr, x, step);
    double now = objective_at(pr, x);
    if (prev - now < 1e-15) break;
    prev = now;
  }
  if (violation(pr.family, x) > 0) return std::nullopt;
  auto [w, b] = white_black(pr, x);
  if (std::abs(w - b) > opt.tol) return std::nullopt;
  return OptimizeResult{x, w, b, std::min(w, b), 0};
}

OptimizeResult pick(const std::vector<std::optional<OptimizeResult>>& runs, Family f) {
  std::optional<OptimizeResult> best;
  int feasible = 0;
  for (const auto& r : runs) {
    if (!r) continue;
    ++feasible;
    if (!best || r->value > best->value) best = r;
  }
  if (!best) throw std::runtime_error("optimize: no feasible balanced start found for " + info(f).name);
  best->feasible_starts = feasible;
  return *best;
}

Problem problem(Family f, const OptimizeOptions& opt) {
  if (opt.starts < 1) throw std::invalid_argument("optimize: starts >= 1");
  return {f, opt.model, info(f).params.size()};
}

}  // namespace

OptimizeResult optimize(Family f, const OptimizeOptions& opt) {
  const Problem pr = problem(f, opt);
  std::vector<std::optional<OptimizeResult>> runs(opt.starts);
#pragma omp parallel for schedule(dynamic, 1)
  for (int s = 0; s < opt.starts; ++s) runs[s] = run_start(pr, opt, s);
  return pick(runs, f);
}

OptimizeResult optimize_serial(Family f, const OptimizeOptions& opt) {
  const Problem pr = problem(f, opt);
  std::vector<std::optional<OptimizeResult>> runs(opt.starts);
  for (int s = 0; s < opt.starts; ++s) runs[s] = run_start(pr, opt, s);
  return pick(runs, f);
}

VerifyReport verify_candidate(Family f, const std::vector<Real>& params) {
  auto a = areas(f, params);
  VerifyReport r;
  r.white = a.white;
  r.black = a.black;
  r.value = std::min(a.white, a.black);
  r.balanced = abs(a.white - a.black) <= Real(1e-12);
  r.formula_matches_geometry = a.in_window;

  // stencil {-1,0,1}^d scaled by 1e-4
  const std::size_t d = params.size();
  std::size_t total = 1;
  for (std::size_t i = 0; i < d; ++i) total *= 3;
  Real best_gain(-1);
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<Real> p = params;
    std::size_t c = code;
    bool moved = false;
    for (std::size_t i = 0; i < d; ++i, c /= 3) {
      int k = static_cast<int>(c % 3) - 1;
      if (k != 0) moved = true;
      p[i] += Real(k) * Real(1e-4);
    }
    if (!moved || violated(f, p)) continue;
    auto q = areas(f, p);
    Real gain = std::min(q.white, q.black) - r.value;
    if (gain > best_gain) best_gain = gain;
  }
  r.best_gain = best_gain.convert_to<double>();
  r.stationary = best_gain <= Real(1e-9);
  return r;
}

}  // namespace expmath::queens
