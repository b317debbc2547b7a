#include "expmath/guess/ansatz.hpp"

#include "expmath/linalg/solve.hpp"

namespace expmath {

std::string AnsatzTerm::label() const {
  std::string s;
  auto add = [&s](const std::string& f) { s += (s.empty() ? "" : "*") + f; };
  if (n_power == 1) add("n");
  else if (n_power != 0) add("n^" + std::to_string(n_power));
  if (a_power == 1) add("a");
  else if (a_power != 0) add("a^" + std::to_string(a_power));
  for (std::size_t k = 0; k < harmonic.size(); ++k) {
    if (harmonic[k] == 0) continue;
    std::string h = "H" + std::to_string(k + 1);
    add(harmonic[k] == 1 ? h : h + "^" + std::to_string(harmonic[k]));
  }
  if (opaque_power == 1) add("E");
  else if (opaque_power != 0) add("E^" + std::to_string(opaque_power));
  return s.empty() ? "1" : s;
}

Rational AnsatzBasis::eval(const AnsatzTerm& t, const AnsatzPoint& p) const {
  Rational v = pow(Rational(p.n), t.n_power) * pow(Rational(p.a), t.a_power);
  for (std::size_t k = 0; k < t.harmonic.size(); ++k)
    if (t.harmonic[k] != 0) v *= pow(harmonic(p.n, static_cast<int>(k) + 1), t.harmonic[k]);
  if (t.opaque_power != 0) {
    if (!opaque) throw std::logic_error("ansatz term needs an opaque basis function");
    v *= pow(opaque(p), t.opaque_power);
  }
  return v;
}

Rational AnsatzBasis::eval(const std::vector<Rational>& coeffs, const AnsatzPoint& p) const {
  Rational acc(0);
  for (std::size_t j = 0; j < terms.size(); ++j)
    if (!coeffs[j].is_zero()) acc += coeffs[j] * eval(terms[j], p);
  return acc;
}

AnsatzBasis AnsatzBasis::harmonic_default(int r) {
  std::vector<std::vector<int>> hs{std::vector<int>(static_cast<std::size_t>(r), 0)};
  for (int k = 0; k < r; ++k) {
    std::vector<int> e(static_cast<std::size_t>(r), 0);
    e[static_cast<std::size_t>(k)] = 1;
    hs.push_back(e);
  }
  for (int k = 0; k < r; ++k)
    for (int l = k; l < r; ++l) {
      std::vector<int> e(static_cast<std::size_t>(r), 0);
      e[static_cast<std::size_t>(k)] += 1;
      e[static_cast<std::size_t>(l)] += 1;
      hs.push_back(e);
    }
  AnsatzBasis b;
  for (const auto& h : hs)
    for (int i = 0; i <= r + 1; ++i) b.terms.push_back(AnsatzTerm{i, 0, h, 0});
  return b;
}

AnsatzBasis AnsatzBasis::from(std::vector<AnsatzTerm> terms) {
  AnsatzBasis b;
  b.terms = std::move(terms);
  return b;
}

std::optional<std::vector<Rational>> ansatz_fit(const AnsatzData& data, const AnsatzBasis& basis,
                                                std::size_t skip) {
  constexpr std::size_t holdout = 3;
  const std::size_t m = basis.terms.size();
  if (data.size() < skip + m + holdout)
    throw std::invalid_argument("ansatz_fit: need " + std::to_string(skip + m + holdout) + " data points, got " +
                                std::to_string(data.size()));
  const std::size_t fit = data.size() - skip - holdout;
  Matrix<Rational> a(fit, m);
  std::vector<Rational> b(fit);
  for (std::size_t e = 0; e < fit; ++e) {
    const auto& [pt, val] = data[skip + e];
    for (std::size_t j = 0; j < m; ++j) a(e, j) = basis.eval(basis.terms[j], pt);
    b[e] = val;
  }
  auto res = solve_linear(a, b);
  if (res.status != SolveStatus::Unique) return std::nullopt;
  for (std::size_t e = skip + fit; e < data.size(); ++e)
    if (basis.eval(res.x, data[e].first) != data[e].second) return std::nullopt;
  return res.x;
}

std::string format_fit(const AnsatzBasis& basis, const std::vector<Rational>& coeffs) {
  std::string s;
  for (std::size_t j = 0; j < coeffs.size(); ++j) {
    if (coeffs[j].is_zero()) continue;
    std::string c = coeffs[j].str();
    if (!s.empty() && c[0] != '-') s += "+";
    s += "(" + c + ")*" + basis.terms[j].label();
  }
  return s.empty() ? "0" : s;
}

}  // namespace expmath
