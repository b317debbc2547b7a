#pragma once

#include <string>
#include <vector>

#include "expmath/core/polynomial.hpp"

namespace expmath {

// Normalizer making a denominator canonical: Q uses primitive integer form
// with positive lead, other fields use monic form.
inline Rational denominator_scale(const Polynomial<Rational>& d) { return primitive_scale(d); }
template <class F>
F denominator_scale(const Polynomial<F>& d) {
  return F(1) / d.lead();
}

// Reduced quotient numer/denom of polynomials over a field F.
template <class F>
class RationalFunction {
 public:
  using poly_type = Polynomial<F>;

  RationalFunction() : den_(F(1)) {}
  RationalFunction(int c) : num_(F(c)), den_(F(1)) {}
  RationalFunction(const F& c) : num_(c), den_(F(1)) {}
  RationalFunction(poly_type n) : num_(std::move(n)), den_(F(1)) { reduce(); }
  RationalFunction(poly_type n, poly_type d) : num_(std::move(n)), den_(std::move(d)) {
    if (den_.zero()) throw DivisionByZero();
    reduce();
  }

  const poly_type& numer() const { return num_; }
  const poly_type& denom() const { return den_; }
  bool zero() const { return num_.zero(); }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ + b.num_, a.den_};
    return {a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) {
    if (a.den_ == b.den_) return {a.num_ - b.num_, a.den_};
    return {a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_};
  }
  friend RationalFunction operator-(const RationalFunction& a) {
    RationalFunction r = a;
    r.num_ = -r.num_;
    return r;
  }
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
    if (a.zero() || b.zero()) return {};
    return {a.num_ * b.num_, a.den_ * b.den_};
  }
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
    if (b.zero()) throw DivisionByZero();
    return {a.num_ * b.den_, a.den_ * b.num_};
  }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }

  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  template <class S>
  S eval(const S& x0) const {
    return num_.template eval<S>(x0) / den_.template eval<S>(x0);
  }

 private:
  void reduce() {
    if (num_.zero()) {
      den_ = poly_type(F(1));
      return;
    }
    auto g = gcd(num_, den_);
    if (g.degree() > 0) {
      num_ = exact_divide(num_, g);
      den_ = exact_divide(den_, g);
    }
    F s = denominator_scale(den_);
    num_ = num_ * s;
    den_ = den_ * s;
  }

  poly_type num_;
  poly_type den_;
};

template <class F>
bool is_zero(const RationalFunction<F>& f) {
  return f.zero();
}
template <class F>
RationalFunction<F> exact_divide(const RationalFunction<F>& a, const RationalFunction<F>& b) {
  return a / b;
}
template <class F>
struct is_field<RationalFunction<F>> : std::true_type {};

template <class F>
std::string format_coeff(const RationalFunction<F>& f, std::span<const std::string> vars) {
  if (f.denom().degree() == 0 && f.denom().lead() == F(1)) return to_string(f.numer(), vars);
  std::string n = to_string(f.numer(), vars);
  if (n.find_first_of("+-", 1) != std::string::npos) n = "(" + n + ")";
  return n + "/(" + to_string(f.denom(), vars) + ")";
}

template <class F>
std::string to_string(const RationalFunction<F>& f, const std::string& var = "t") {
  std::vector<std::string> v{var, "v", "u"};
  return format_coeff(f, std::span<const std::string>(v));
}

// First N Taylor coefficients at 0 (requires denom(0) != 0).
template <class F>
std::vector<F> series_coeffs(const RationalFunction<F>& f, std::size_t N) {
  const auto& d = f.denom();
  const F d0 = d[0];
  if (is_zero(d0)) throw std::domain_error("series_coeffs: pole at the origin");
  std::vector<F> c(N, F(0));
  for (std::size_t i = 0; i < N; ++i) {
    F acc = f.numer()[i];
    std::size_t top = std::min<std::size_t>(i, d.size() ? d.size() - 1 : 0);
    for (std::size_t j = 1; j <= top; ++j) acc = acc - d.coeffs()[j] * c[i - j];
    c[i] = acc / d0;
  }
  return c;
}

using QRatFunc = RationalFunction<Rational>;

}  // namespace expmath
