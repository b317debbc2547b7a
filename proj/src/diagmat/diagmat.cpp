#include "expmath/diagmat/diagmat.hpp"

#include <map>
#include <set>
#include <stdexcept>

#include "expmath/guess/cfinite.hpp"
#include "expmath/linalg/determinant.hpp"
#include "expmath/linalg/solve.hpp"

namespace expmath::diagmat {

namespace {

void check_band(const std::vector<Rational>& row, const std::vector<Rational>& col) {
  if (row.empty() || col.empty()) throw std::invalid_argument("diagmat: empty row or column prefix");
  if (row[0] != col[0]) throw std::invalid_argument("diagmat: first row and column disagree at the corner");
}

DiagSpec spec_of(const std::vector<Rational>& row, const std::vector<Rational>& col, std::size_t n) {
  check_band(row, col);
  return DiagSpec{n, row, col};
}

Rational perm_of_size(const DiagSpec& s, std::size_t n) {
  const int k1 = static_cast<int>(s.row.size()), k2 = static_cast<int>(s.col.size());
  const int w = k1 + k2 - 1;  // bit b <-> column i-(k2-1)+b
  std::map<unsigned, Rational> cur;
  cur[(1u << (k2 - 1)) - 1u] = Rational(1);  // columns left of 0 count as used
  for (std::size_t i = 0; i < n; ++i) {
    std::map<unsigned, Rational> next;
    for (const auto& [mask, val] : cur) {
      for (int b = 0; b < w; ++b) {
        if (mask >> b & 1u) continue;
        long col = static_cast<long>(i) - (k2 - 1) + b;
        if (col < 0 || col >= static_cast<long>(n)) continue;
        Rational e = s.band(b - (k2 - 1));
        if (e.is_zero()) continue;
        unsigned nm = mask | (1u << b);
        if (!(nm & 1u)) continue;  // leftmost column is out of reach afterwards
        next[nm >> 1] += val * e;
      }
    }
    cur = std::move(next);
  }
  Rational total(0);
  for (const auto& [mask, val] : cur) total += val;
  return total;
}

}  // namespace

Rational DiagSpec::band(long offset) const {
  if (offset >= 0) return offset < static_cast<long>(row.size()) ? row[static_cast<std::size_t>(offset)] : Rational(0);
  return -offset < static_cast<long>(col.size()) ? col[static_cast<std::size_t>(-offset)] : Rational(0);
}

Matrix<Rational> build_matrix(const DiagSpec& spec) {
  check_band(spec.row, spec.col);
  Matrix<Rational> m(spec.n, spec.n);
  for (std::size_t i = 0; i < spec.n; ++i)
    for (std::size_t j = 0; j < spec.n; ++j) m(i, j) = spec.band(static_cast<long>(j) - static_cast<long>(i));
  return m;
}

std::vector<Rational> det_sequence_serial(const std::vector<Rational>& row, const std::vector<Rational>& col,
                                          std::size_t m, std::size_t n) {
  std::vector<Rational> out;
  for (std::size_t d = m; d <= n; ++d) out.push_back(determinant(build_matrix(spec_of(row, col, d))));
  return out;
}

std::vector<Rational> det_sequence(const std::vector<Rational>& row, const std::vector<Rational>& col,
                                   std::size_t m, std::size_t n) {
  check_band(row, col);
  std::vector<Rational> out(n >= m ? n - m + 1 : 0);
  const long count = static_cast<long>(out.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = count - 1; i >= 0; --i)
    out[static_cast<std::size_t>(i)] =
        determinant(build_matrix(DiagSpec{m + static_cast<std::size_t>(i), row, col}));
  return out;
}

std::vector<Rational> perm_sequence(const std::vector<Rational>& row, const std::vector<Rational>& col,
                                    std::size_t m, std::size_t n) {
  check_band(row, col);
  if (row.size() + col.size() > 30) throw std::invalid_argument("perm_sequence: band too wide");
  std::vector<Rational> out;
  for (std::size_t d = m; d <= n; ++d) out.push_back(perm_of_size(DiagSpec{d, row, col}, d));
  return out;
}

QRatFunc gf_family(const std::vector<Rational>& row, const std::vector<Rational>& col, Mode mode,
                   std::size_t m, std::size_t n) {
  if (m < 1 || m > n) throw std::invalid_argument("gf_family: need 1 <= m <= n");
  auto L = mode == Mode::Det ? det_sequence(row, col, 1, n) : perm_sequence(row, col, 1, n);
  std::vector<Rational> tail(L.begin() + static_cast<long>(m - 1), L.end());
  auto rec = guess_rec(tail);
  if (!rec) throw std::runtime_error("gf_family: no recurrence on the window; enlarge n - m");
  const std::size_t d = rec->order();
  std::vector<Rational> dc{Rational(1)};
  for (const auto& c : rec->coeffs) dc.push_back(-c);
  QPoly D(dc);
  std::vector<Rational> gc{Rational(1)};
  gc.insert(gc.end(), L.begin(), L.end());
  // the relation holds from index m+d on, so the numerator has degree < m+d
  QPoly N = (D * QPoly(gc)).truncate(std::max(d + 1, m + d));
  QRatFunc f(N, D);
  auto s = series_coeffs(f, gc.size());
  if (s != gc) throw std::runtime_error("gf_family: generating function disagrees with the data");
  return f;
}

MinorState root_state(const DiagSpec& spec) {
  MinorState s;
  for (int o = 0; o + 1 < static_cast<int>(spec.row.size()); ++o) s.offsets.push_back(o);
  return s;
}

std::vector<Expansion> expand_minor(const DiagSpec& spec, const MinorState& s, Mode mode) {
  const int k1 = static_cast<int>(spec.row.size()), k2 = static_cast<int>(spec.col.size());
  if (static_cast<int>(s.offsets.size()) != k1 - 1) throw std::invalid_argument("expand_minor: malformed state");
  std::vector<int> cols = s.offsets;
  cols.push_back(k1 - 1);
  std::vector<Expansion> out;
  for (std::size_t p = 0; p < cols.size(); ++p) {
    Rational e = spec.band(cols[p]);
    if (e.is_zero()) continue;
    MinorState child;
    bool dead = false;
    for (std::size_t q = 0; q < cols.size(); ++q) {
      if (q == p) continue;
      if (cols[q] == -(k2 - 1)) dead = true;  // column no later row can reach
      child.offsets.push_back(cols[q] - 1);
    }
    if (dead) continue;
    if (mode == Mode::Det && p % 2 == 1) e = -e;
    out.push_back({e, std::move(child)});
  }
  return out;
}

std::vector<MinorState> children_closure(const DiagSpec& spec, Mode mode) {
  std::vector<MinorState> order{root_state(spec)};
  std::set<MinorState> seen{order[0]};
  for (std::size_t i = 0; i < order.size(); ++i)
    for (auto& e : expand_minor(spec, order[i], mode))
      if (seen.insert(e.child).second) order.push_back(e.child);
  return order;
}

Matrix<Rational> materialize(const DiagSpec& spec, const MinorState& s, std::size_t m) {
  std::vector<int> cols = s.offsets;
  for (int o = static_cast<int>(spec.row.size()) - 1; cols.size() < m; ++o) cols.push_back(o);
  Matrix<Rational> a(m, m);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) a(i, j) = spec.band(cols[j] - static_cast<long>(i));
  return a;
}

QRatFunc gf_symbolic(const std::vector<Rational>& row, const std::vector<Rational>& col, Mode mode) {
  DiagSpec spec = spec_of(row, col, 0);
  auto states = children_closure(spec, mode);
  std::map<MinorState, std::size_t> index;
  for (std::size_t i = 0; i < states.size(); ++i) index[states[i]] = i;
  const std::size_t k = states.size();
  const QRatFunc t(qpoly({0, 1}));
  Matrix<QRatFunc> a(k, k);
  std::vector<QRatFunc> b(k, QRatFunc(0));
  b[0] = QRatFunc(1);
  for (std::size_t i = 0; i < k; ++i) {
    a(i, i) = QRatFunc(1);
    for (auto& e : expand_minor(spec, states[i], mode)) {
      std::size_t j = index.at(e.child);
      a(i, j) = a(i, j) - t * QRatFunc(e.multiplier);
    }
  }
  auto res = solve_linear(a, b);
  if (res.status != SolveStatus::Unique) throw std::runtime_error("gf_symbolic: singular state system");
  return res.x[0];
}

}  // namespace expmath::diagmat
