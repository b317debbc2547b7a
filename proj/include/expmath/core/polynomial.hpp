#pragma once

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "expmath/core/ring.hpp"

namespace expmath {

// Dense univariate polynomial; coeffs[i] multiplies x^i. Zero is the empty vector.
template <class R>
class Polynomial {
 public:
  using coeff_type = R;

  Polynomial() = default;
  Polynomial(int c) : Polynomial(R(c)) {}
  Polynomial(const R& c) {
    if (!is_zero(c)) c_.push_back(c);
  }
  explicit Polynomial(std::vector<R> c) : c_(std::move(c)) { trim(); }

  static Polynomial monomial(const R& c, std::size_t k) {
    if (is_zero(c)) return {};
    std::vector<R> v(k + 1, R(0));
    v[k] = c;
    return Polynomial(std::move(v));
  }
  static Polynomial x() { return monomial(R(1), 1); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool zero() const { return c_.empty(); }
  std::size_t size() const { return c_.size(); }
  const std::vector<R>& coeffs() const { return c_; }
  R operator[](std::size_t i) const { return i < c_.size() ? c_[i] : R(0); }
  const R& lead() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Polynomial& operator+=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] + o.c_[i];
    trim();
    return *this;
  }
  Polynomial& operator-=(const Polynomial& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), R(0));
    for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] = c_[i] - o.c_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator-(const Polynomial& a) {
    Polynomial r = a;
    for (auto& c : r.c_) c = -c;
    return r;
  }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.zero() || b.zero()) return {};
    std::vector<R> r(a.c_.size() + b.c_.size() - 1, R(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] = r[i + j] + a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(r));
  }
  friend Polynomial operator*(const Polynomial& a, const R& s) {
    if (is_zero(s)) return {};
    Polynomial r = a;
    for (auto& c : r.c_) c = c * s;
    r.trim();
    return r;
  }
  friend Polynomial operator*(const R& s, const Polynomial& a) { return a * s; }
  Polynomial& operator*=(const Polynomial& o) { return *this = *this * o; }

  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

  // Horner evaluation at any value type accepting R coefficients.
  template <class S>
  S eval(const S& x0) const {
    S acc = S(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x0 + S(*it);
    return acc;
  }
  R eval(const R& x0) const { return eval<R>(x0); }

  Polynomial derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<R> r(c_.size() - 1, R(0));
    for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * R(static_cast<int>(i));
    return Polynomial(std::move(r));
  }

  // Multiply by x^k.
  Polynomial shift(std::size_t k) const {
    if (zero()) return {};
    std::vector<R> r(k, R(0));
    r.insert(r.end(), c_.begin(), c_.end());
    return Polynomial(std::move(r));
  }

  // Keep terms of degree < k.
  Polynomial truncate(std::size_t k) const {
    if (c_.size() <= k) return *this;
    return Polynomial(std::vector<R>(c_.begin(), c_.begin() + static_cast<long>(k)));
  }

  // Coefficient reversal: x^deg p(1/x) padded to the given degree.
  Polynomial reflect(std::size_t deg) const {
    std::vector<R> r(deg + 1, R(0));
    for (std::size_t i = 0; i < c_.size(); ++i) {
      if (i > deg) throw std::domain_error("reflect: degree too small");
      r[deg - i] = c_[i];
    }
    return Polynomial(std::move(r));
  }

 private:
  void trim() {
    while (!c_.empty() && is_zero(c_.back())) c_.pop_back();
  }
  std::vector<R> c_;
};

template <class R>
bool is_zero(const Polynomial<R>& p) {
  return p.zero();
}

// Long division; over an integral domain the leading coefficient division must be exact.
template <class R>
std::pair<Polynomial<R>, Polynomial<R>> divrem(const Polynomial<R>& a, const Polynomial<R>& b) {
  if (b.zero()) throw DivisionByZero();
  std::vector<R> rem = a.coeffs();
  int db = b.degree();
  if (a.degree() < db) return {Polynomial<R>(), a};
  std::vector<R> q(static_cast<std::size_t>(a.degree() - db + 1), R(0));
  const R& lb = b.lead();
  for (int i = a.degree(); i >= db; --i) {
    const R& top = rem[static_cast<std::size_t>(i)];
    if (is_zero(top)) continue;
    R f = exact_divide(top, lb);
    q[static_cast<std::size_t>(i - db)] = f;
    for (int j = 0; j <= db; ++j) {
      auto& slot = rem[static_cast<std::size_t>(i - db + j)];
      slot = slot - f * b.coeffs()[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial<R>(std::move(q)), Polynomial<R>(std::move(rem))};
}

template <class R>
Polynomial<R> exact_divide(const Polynomial<R>& a, const Polynomial<R>& b) {
  auto [q, r] = divrem(a, b);
  if (!r.zero()) throw std::domain_error("polynomial division not exact");
  return q;
}

// Monic gcd over a field.
template <class F>
Polynomial<F> gcd(Polynomial<F> a, Polynomial<F> b) {
  while (!b.zero()) {
    auto r = divrem(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.zero()) return a;
  return a * (F(1) / a.lead());
}

using QPoly = Polynomial<Rational>;
using ZPoly = Polynomial<Integer>;

// Scale p to a primitive integer polynomial with positive leading coefficient.
// Returns the scale factor s with result = s*p.
Rational primitive_scale(const QPoly& p);
QPoly primitive_part(const QPoly& p);

QPoly qpoly(std::initializer_list<long> coeffs);
QPoly qpoly(const std::vector<Rational>& coeffs);

inline std::string format_coeff(const Rational& c, std::span<const std::string>) { return c.str(); }
inline std::string format_coeff(const Integer& c, std::span<const std::string>) { return c.get_str(); }

template <class R>
std::string format_coeff(const Polynomial<R>& p, std::span<const std::string> vars);

// Human-readable rendering, highest degree first, e.g. "t^2-4*t+1".
template <class R>
std::string to_string(const Polynomial<R>& p, std::span<const std::string> vars) {
  if (p.zero()) return "0";
  const std::string& x = vars.empty() ? std::string("x") : vars[0];
  auto inner = vars.empty() ? vars : vars.subspan(1);
  std::string out;
  for (int i = p.degree(); i >= 0; --i) {
    const R& c = p.coeffs()[static_cast<std::size_t>(i)];
    if (is_zero(c)) continue;
    std::string cs = format_coeff(c, inner);
    bool compound = cs.find_first_of("+-", 1) != std::string::npos;
    bool neg = !compound && cs[0] == '-';
    if (neg) cs = cs.substr(1);
    if (compound && i > 0) cs = "(" + cs + ")";
    if (!out.empty() || neg) out += neg ? "-" : "+";
    std::string mono = i == 0 ? "" : (i == 1 ? x : x + "^" + std::to_string(i));
    if (i == 0) out += cs;
    else if (cs == "1") out += mono;
    else out += cs + "*" + mono;
  }
  return out;
}

template <class R>
std::string format_coeff(const Polynomial<R>& p, std::span<const std::string> vars) {
  return to_string(p, vars);
}

template <class R>
std::string to_string(const Polynomial<R>& p, const std::string& var = "t") {
  std::vector<std::string> v{var, "v", "u"};
  return to_string(p, std::span<const std::string>(v));
}

}  // namespace expmath
