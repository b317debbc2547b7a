#pragma once

#include <boost/multiprecision/cpp_bin_float.hpp>

#include <algorithm>
#include <array>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include "expmath/core/rational.hpp"

namespace expmath::queens {

// 50 significant digits, no expression templates.
using Real = boost::multiprecision::number<boost::multiprecision::cpp_bin_float<50>,
                                           boost::multiprecision::et_off>;

enum class Family {
  JubinTwoPentagons,
  Rectangle,
  Parallelogram,
  Triangle,
  Hexagon,
  TwoSquares,
  TwoTrianglesSame,
  TwoTrianglesOpposite,
  SquarePlusTriangle,
};

struct FamilyInfo {
  Family family;
  std::string name;
  std::vector<std::string> params;
};

const std::vector<FamilyInfo>& families();
const FamilyInfo& info(Family f);
Family parse_family(const std::string& name);

template <class T>
using Vertex = std::array<T, 2>;
template <class T>
using Polygon = std::vector<Vertex<T>>;
template <class T>
using PolygonList = std::vector<Polygon<T>>;

struct Infeasible : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

template <class T>
struct Constraint {
  std::string name;
  T slack;  // feasible iff slack >= 0
};

template <class T>
struct AreaPair {
  T white;
  T black;            // closed form
  T geometric_black;  // exact sweep; authoritative
  bool in_window = true;  // closed form agrees with the sweep
  std::string warning;
};

namespace detail {

template <class T>
T pos(const T& x) {
  return x < T(0) ? T(0) : x;
}
template <class T>
T half(const T& x) {
  return x / T(2);
}

inline double to_double(double x) { return x; }
inline double to_double(const Rational& x) { return x.to_double(); }
inline double to_double(const Real& x) { return x.convert_to<double>(); }

template <class T>
void need(const std::vector<T>& p, std::size_t k, Family f) {
  if (p.size() != k)
    throw std::invalid_argument(info(f).name + " takes " + std::to_string(k) + " parameters");
}

}  // namespace detail

// Parameter constraints; every slack must be nonnegative.
template <class T>
std::vector<Constraint<T>> constraints(Family f, const std::vector<T>& p) {
  using detail::half;
  const auto& names = info(f).params;
  detail::need(p, names.size(), f);
  std::vector<Constraint<T>> c;
  for (std::size_t i = 0; i < p.size(); ++i) {
    c.push_back({names[i] + " >= 0", p[i]});
    c.push_back({names[i] + " <= 1", T(1) - p[i]});
  }
  auto add = [&c](std::string n, T v) { c.push_back({std::move(n), v}); };
  switch (f) {
    case Family::JubinTwoPentagons: {
      const T &a = p[0], &b = p[1], &cc = p[2], &d = p[3], &e = p[4], &ff = p[5], &g = p[6];
      add("e <= a", a - e);
      add("e <= b", b - e);
      add("a+b-e <= 1", T(1) - (a + b - e));
      add("f <= c", cc - ff);
      add("2f <= c+d", cc + d - T(2) * ff);
      add("c-f+d <= 1", T(1) - (cc - ff + d));
      add("a <= g", g - a);
      add("g+c <= 1", T(1) - (g + cc));
      add("d <= g", g - d);
      add("g+b <= 1", T(1) - (g + b));
      const T xm = half(g + d - b) + cc - ff;
      add("a <= (g+d-b)/2+c-f", xm - a);
      add("(g+d-b)/2+c-f <= g", g - xm);
      add("g+2c-2f+d-a <= 1", T(1) - (g + T(2) * cc - T(2) * ff + d - a));
      add("a+b-e <= g+c", g + cc - (a + b - e));
      add("g+c <= a+b-e+g-d", a + b - e - d - cc);
      add("a+b-e+g-d <= 1", T(1) - (a + b - e + g - d));
      add("a+b-e <= 1+d-g", T(1) + d - g - (a + b - e));
      break;
    }
    case Family::Parallelogram:
      add("a+b <= 1", T(1) - p[0] - p[1]);
      break;
    case Family::Hexagon: {
      const T &a = p[0], &b = p[1], &cc = p[2], &d = p[3];
      add("a+b <= 1", T(1) - a - b);
      add("b+c <= 1", T(1) - b - cc);
      add("d <= a+b", a + b - d);
      add("d <= b+c", b + cc - d);
      break;
    }
    case Family::TwoSquares:
    case Family::TwoTrianglesSame:
    case Family::SquarePlusTriangle:
      add("a <= 1/2", T(1) / T(2) - p[0]);
      add("a <= s", p[1] - p[0]);
      add("s <= 1-a", T(1) - p[0] - p[1]);
      break;
    case Family::TwoTrianglesOpposite:
      add("a <= 1/2", T(1) / T(2) - p[0]);
      break;
    default:
      break;
  }
  return c;
}

template <class T>
std::optional<std::string> violated(Family f, const std::vector<T>& p) {
  for (const auto& c : constraints(f, p))
    if (c.slack < T(0)) return c.name;
  return std::nullopt;
}

template <class T>
void require_feasible(Family f, const std::vector<T>& p) {
  if (auto v = violated(f, p)) throw Infeasible(info(f).name + ": violates " + *v);
}

template <class T>
PolygonList<T> white_polygons(Family f, const std::vector<T>& p) {
  detail::need(p, info(f).params.size(), f);
  const T z(0), one(1);
  switch (f) {
    case Family::JubinTwoPentagons: {
      const T &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4], &ff = p[5], &g = p[6];
      return {{{z, z}, {a, a}, {a, a + b - e}, {a - e, a + b - e}, {z, b}},
              {{g, z}, {g + c, z}, {g + c, c - T(2) * ff + d}, {g + c - ff, c - ff + d}, {g, d}}};
    }
    case Family::Rectangle:
      return {{{z, z}, {p[0], z}, {p[0], p[1]}, {z, p[1]}}};
    case Family::Parallelogram:
      return {{{z, z}, {p[0], p[0]}, {p[0], p[0] + p[1]}, {z, p[1]}}};
    case Family::Triangle:
      return {{{z, z}, {p[0], p[0]}, {z, p[0]}}};
    case Family::Hexagon: {
      const T &a = p[0], &b = p[1], &c = p[2], &d = p[3];
      return {{{z, z}, {a, z}, {a + b, b}, {a + b, b + c}, {d, b + c}, {z, b + c - d}}};
    }
    case Family::TwoSquares: {
      const T &a = p[0], &s = p[1];
      return {{{z, z}, {a, z}, {a, a}, {z, a}}, {{s, z}, {s + a, z}, {s + a, a}, {s, a}}};
    }
    case Family::TwoTrianglesSame: {
      const T &a = p[0], &s = p[1];
      return {{{z, z}, {a, z}, {a, a}}, {{s, z}, {s + a, z}, {s + a, a}}};
    }
    case Family::TwoTrianglesOpposite: {
      const T& a = p[0];
      return {{{z, z}, {a, z}, {a, a}}, {{one - a, z}, {one, z}, {one - a, a}}};
    }
    case Family::SquarePlusTriangle: {
      const T &a = p[0], &s = p[1];
      return {{{z, z}, {a, z}, {a, a}, {z, a}}, {{s, z}, {s + a, z}, {s + a, a}}};
    }
  }
  throw std::logic_error("unhandled family");
}

template <class T>
T polygon_area(const Polygon<T>& poly) {
  T twice(0);
  for (std::size_t i = 0; i < poly.size(); ++i) {
    const auto& u = poly[i];
    const auto& v = poly[(i + 1) % poly.size()];
    twice += u[0] * v[1] - v[0] * u[1];
  }
  if (twice < T(0)) twice = -twice;
  return twice / T(2);
}

// Area of the unit-square points sharing no row, column or diagonal with the
// white set, for white given as convex polygons. The free y-length is linear
// in x between the breakpoints collected below, so the midpoint rule is exact.
template <class T>
T black_area_geometric(const PolygonList<T>& white) {
  using Iv = std::pair<T, T>;
  std::vector<Iv> X, Y, U, V;  // forbidden ranges of x, y, x+y, y-x
  for (const auto& poly : white) {
    if (poly.empty()) continue;
    T lo[4] = {}, hi[4] = {};
    for (std::size_t i = 0; i < poly.size(); ++i) {
      const T f[4] = {poly[i][0], poly[i][1], poly[i][0] + poly[i][1], poly[i][1] - poly[i][0]};
      for (int k = 0; k < 4; ++k) {
        if (i == 0 || f[k] < lo[k]) lo[k] = f[k];
        if (i == 0 || hi[k] < f[k]) hi[k] = f[k];
      }
    }
    X.push_back({lo[0], hi[0]});
    Y.push_back({lo[1], hi[1]});
    U.push_back({lo[2], hi[2]});
    V.push_back({lo[3], hi[3]});
  }
  std::vector<T> yend = {T(0), T(1)}, uend, vend;
  for (auto& iv : Y) yend.insert(yend.end(), {iv.first, iv.second});
  for (auto& iv : U) uend.insert(uend.end(), {iv.first, iv.second});
  for (auto& iv : V) vend.insert(vend.end(), {iv.first, iv.second});

  std::vector<T> xs = {T(0), T(1)};
  for (auto& iv : X) xs.insert(xs.end(), {iv.first, iv.second});
  for (auto& y : yend) {
    for (auto& u : uend) xs.push_back(u - y);
    for (auto& v : vend) xs.push_back(y - v);
  }
  for (auto& u : uend)
    for (auto& v : vend) xs.push_back((u - v) / T(2));
  std::vector<T> cut;
  for (auto& x : xs)
    if (!(x < T(0)) && !(T(1) < x)) cut.push_back(x);
  std::sort(cut.begin(), cut.end());
  cut.erase(std::unique(cut.begin(), cut.end()), cut.end());

  auto free_length = [&](const T& x) {
    for (auto& iv : X)
      if (iv.first < x && x < iv.second) return T(0);
    std::vector<Iv> bad;
    auto push = [&](T a, T b) {
      if (a < T(0)) a = T(0);
      if (T(1) < b) b = T(1);
      if (a < b) bad.push_back({a, b});
    };
    for (auto& iv : Y) push(iv.first, iv.second);
    for (auto& iv : U) push(iv.first - x, iv.second - x);
    for (auto& iv : V) push(iv.first + x, iv.second + x);
    std::sort(bad.begin(), bad.end());
    T covered(0), reach(0);
    for (auto& [a, b] : bad) {
      T start = a < reach ? reach : a;
      if (start < b) {
        covered += b - start;
        reach = b;
      }
    }
    return T(1) - covered;
  };

  T area(0);
  for (std::size_t i = 0; i + 1 < cut.size(); ++i) {
    const T w = cut[i + 1] - cut[i];
    area += free_length((cut[i] + cut[i + 1]) / T(2)) * w;
  }
  return area;
}

template <class T>
T white_area(Family f, const std::vector<T>& p) {
  T s(0);
  for (const auto& poly : white_polygons(f, p)) s += polygon_area(poly);
  return s;
}

// Closed-form areas per family, checked against the sweep.
template <class T>
AreaPair<T> areas(Family f, const std::vector<T>& p) {
  using detail::half;
  using detail::pos;
  require_feasible(f, p);
  AreaPair<T> r;
  switch (f) {
    case Family::JubinTwoPentagons: {
      const T &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4], &ff = p[5], &g = p[6];
      r.white = a * b - half(e * e) + c * d + half(c * c) - ff * ff;
      const T q34 = T(3) / T(4), q32 = T(3) / T(2), q74 = T(7) / T(4);
      r.black = -a - q34 * d * d + T(2) * g - d - c * d - a * b - ff * ff - half(e * e) - q32 * c * c +
                T(2) * b * c - T(2) * a * ff + T(3) * a * c + T(2) * a * d + T(2) * c * ff - e * c - e * d +
                b * e + a * e - b * ff + ff * d + q32 * b * d - a * a - q34 * b * b - T(2) * g * c +
                half(g * d) - half(g * b) + a * g + g * ff - q74 * g * g;
      break;
    }
    case Family::Rectangle:
    case Family::Parallelogram: {
      r.white = p[0] * p[1];
      const T m = pos(T(1) - p[0] - p[1]);
      r.black = m * m;
      break;
    }
    case Family::Triangle:
      r.white = half(p[0] * p[0]);
      r.black = half((T(1) - p[0]) * (T(1) - p[0]));
      break;
    case Family::Hexagon: {
      const T &a = p[0], &b = p[1], &c = p[2], &d = p[3];
      r.white = (a + b) * (b + c) - half(b * b + d * d);
      const T u = T(1) - a - b - c, v = T(1) - a - T(2) * b - c + d;
      r.black = half(u * u) + half(v * v);
      break;
    }
    case Family::TwoSquares: {
      const T &a = p[0], &s = p[1];
      r.white = T(2) * a * a;
      const T m = pos(T(1) - s - T(2) * a);
      r.black = (s - a) * (T(1) - s - a) + (s - a) * (s - a) / T(4) + m * m + pos(s - T(2) * a) * (T(1) - s - a);
      break;
    }
    case Family::TwoTrianglesSame: {
      const T &a = p[0], &s = p[1];
      r.white = a * a;
      const T m = pos(T(1) - s - T(2) * a);
      r.black = T(2) * (s - a) * (T(1) - s - a) + half((s - a) * (s - a)) + half((T(1) - s - a) * (T(1) - s - a)) +
                half(m * m);
      break;
    }
    case Family::TwoTrianglesOpposite: {
      const T& a = p[0];
      r.white = a * a;
      r.black = T(1) / T(4) - a * a;
      break;
    }
    case Family::SquarePlusTriangle: {
      const T &a = p[0], &s = p[1];
      r.white = T(3) / T(2) * a * a;
      const T m = pos(T(1) - s - T(2) * a);
      r.black = T(2) * (s - a) * (T(1) - s - a) + (s - a) * (s - a) / T(4) + m * m;
      break;
    }
  }
  r.geometric_black = black_area_geometric(white_polygons(f, p));
  if constexpr (std::is_same_v<T, Rational>) {
    r.in_window = r.black == r.geometric_black;
  } else {
    T diff = r.black - r.geometric_black;
    if (diff < T(0)) diff = -diff;
    r.in_window = !(T(1e-12) < diff);
  }
  if (!r.in_window) r.warning = "closed-form black area is outside its validity window; geometric value is authoritative";
  return r;
}

// The two black pentagons of the two-pentagon family.
template <class T>
PolygonList<T> pentagon_black_regions(const std::vector<T>& p) {
  require_feasible(Family::JubinTwoPentagons, p);
  using detail::half;
  const T &a = p[0], &b = p[1], &c = p[2], &d = p[3], &e = p[4], &ff = p[5], &g = p[6];
  const T one(1);
  return {{{g, one},
           {a, one},
           {a, g + T(2) * c - T(2) * ff + d - a},
           {half(g + d - b) + c - ff, half(g + d + b) + c - ff},
           {g, g + b}},
          {{one, one}, {g + c, g + c}, {g + c, a + b - e}, {a + b - e + g - d, a + b - e}, {one, one + d - g}}};
}

}  // namespace expmath::queens
