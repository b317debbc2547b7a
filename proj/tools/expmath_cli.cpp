// expmath: command-line front end. JSON on stdout by default; exact values are
// strings with a parallel float. Failures print {"error": {...}} and exit nonzero.

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <sstream>

#include "expmath/diagmat/diagmat.hpp"
#include "expmath/guess/cfinite.hpp"
#include "expmath/guess/holonomic.hpp"
#include "expmath/parking/parking.hpp"
#include "expmath/queens/queens.hpp"
#include "expmath/quicksort/quicksort.hpp"
#include "expmath/spanning/graph.hpp"
#include "expmath/spanning/grid.hpp"

using json = nlohmann::ordered_json;
using namespace expmath;

namespace {

enum Exit { kOk = 0, kUsage = 2, kFailure = 3 };

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

json exact(const Rational& x) { return {{"exact", x.str()}, {"float", x.to_double()}}; }
json exact(const Integer& x) { return exact(Rational(x)); }

template <class T>
json exact_list(const std::vector<T>& xs) {
  json a = json::array();
  for (const auto& x : xs) a.push_back(exact(x));
  return a;
}

json coeff_list(const QPoly& p) {
  json a = json::array();
  for (int i = 0; i <= p.degree(); ++i) a.push_back(p[i].str());
  return a;
}

json gf_json(const QRatFunc& f, const std::string& var = "t") {
  return {{"gf", to_string(f, var)}, {"numerator", coeff_list(f.numer())}, {"denominator", coeff_list(f.denom())}};
}

std::vector<Rational> parse_rationals(const std::string& s) {
  std::vector<Rational> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(Rational::parse(item));
  return out;
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

struct Output {
  std::string format = "json";
  std::string path;
  void emit(const json& j, const std::string& csv = "") const {
    std::ostringstream body;
    if (format == "csv") {
      require(!csv.empty(), "this request has no CSV form; use --format json");
      body << csv;
    } else {
      body << j.dump(2) << '\n';
    }
    if (path.empty()) {
      std::cout << body.str();
    } else {
      std::ofstream f(path);
      if (!f) throw std::runtime_error("cannot write " + path);
      f << body.str();
    }
  }
};

// ---------------------------------------------------------------- guess

struct GuessArgs {
  std::string seq;
  std::size_t offset = 1;
  bool symmetric = false;
  bool holonomic = false;
  std::size_t max_c = 8;
};

void run_guess(const GuessArgs& g, const Output& out) {
  auto L = parse_rationals(g.seq);
  json j;
  if (g.holonomic) {
    auto r = find_rec(L, g.max_c);
    if (!r) throw std::runtime_error("no recurrence with order + degree <= " + std::to_string(g.max_c));
    j["order"] = r->order;
    json polys = json::array();
    for (const auto& p : r->coeff_polys) polys.push_back(to_string(p, "n"));
    j["coeff_polys"] = polys;
    j["meaning"] = "sum_i coeff_polys[i](n) * a(n+i) = 0";
    j["valid_from"] = r->valid_from;
    out.emit(j);
    return;
  }
  auto spec = guess_rec(L, g.symmetric);
  if (!spec) throw std::runtime_error("no C-finite recurrence fits the data");
  j["initial"] = json::array();
  for (const auto& x : spec->initial) j["initial"].push_back(x.str());
  j["rec"] = json::array();
  for (const auto& x : spec->coeffs) j["rec"].push_back(x.str());
  if (auto f = c_to_r(*spec, g.offset)) {
    j.update(gf_json(*f));
  }
  j["offset"] = g.offset;
  out.emit(j);
}

// ------------------------------------------------------------- spanning

struct SpanningArgs {
  std::size_t k = 2;
  std::size_t n_lo = 1, n_hi = 10;
  bool gf = false, two_forest = false, vertical = false, resistance = false;
};

void run_spanning(const SpanningArgs& s, const Output& out) {
  require(s.k >= 1, "--k must be >= 1");
  require(s.n_lo >= 1 && s.n_lo <= s.n_hi, "need 1 <= --n-lo <= --n-hi");
  json j;
  j["k"] = s.k;
  if (s.gf) {
    auto g = spanning::gf_spanning_grid(s.k);
    j.update(gf_json(g.gf));
    j["window"] = {g.window.first, g.window.second};
    out.emit(j);
    return;
  }
  if (s.two_forest) {
    j.update(gf_json(spanning::gf_two_forest_grid(s.k)));
    out.emit(j);
    return;
  }
  if (s.vertical) {
    auto b = spanning::ver_gf(s.k);
    auto show = [](const Polynomial<QPoly>& p) {
      json a = json::array();
      for (int i = 0; i <= p.degree(); ++i) a.push_back(to_string(p[i], "v"));
      return a;
    };
    j["numerator_t_coeffs"] = show(b.numer);
    j["denominator_t_coeffs"] = show(b.denom);
    out.emit(j);
    return;
  }
  json rows = json::array();
  std::ostringstream csv;
  if (s.resistance) {
    csv << "k,n,resistance,float\n";
    for (std::size_t n = s.n_lo; n <= s.n_hi; ++n) {
      auto r = spanning::joint_resistance(s.k, n);
      rows.push_back({{"n", n}, {"resistance", exact(r)}});
      csv << s.k << ',' << n << ',' << r.str() << ',' << r.to_double() << '\n';
    }
    j["doyle_constant"] = exact(spanning::doyle_constant(s.k));
  } else {
    auto counts = spanning::spanning_counts(s.k, s.n_lo, s.n_hi);
    csv << "k,n,count\n";
    for (std::size_t i = 0; i < counts.size(); ++i) {
      rows.push_back({{"n", s.n_lo + i}, {"count", to_string(counts[i])}});
      csv << s.k << ',' << s.n_lo + i << ',' << to_string(counts[i]) << '\n';
    }
  }
  j["rows"] = rows;
  out.emit(j, csv.str());
}

// -------------------------------------------------------------- diagmat

struct DiagmatArgs {
  std::string row, col;
  std::string mode = "det";
  std::string method = "both";
  std::size_t terms = 0;
};

void run_diagmat(const DiagmatArgs& d, const Output& out) {
  auto row = parse_rationals(d.row), col = parse_rationals(d.col);
  require(!row.empty() && !col.empty(), "--row and --col need at least one entry");
  require(row[0] == col[0], "row[0] and col[0] are the same diagonal entry and must agree");
  require(d.mode == "det" || d.mode == "perm", "--mode is det or perm");
  const auto mode = d.mode == "det" ? diagmat::Mode::Det : diagmat::Mode::Perm;
  json j;
  j["mode"] = d.mode;
  if (d.terms > 0) {
    auto seq = mode == diagmat::Mode::Det ? diagmat::det_sequence(row, col, 1, d.terms)
                                          : diagmat::perm_sequence(row, col, 1, d.terms);
    j["sequence"] = exact_list(seq);
  }
  const std::size_t width = row.size() + col.size();
  if (d.method == "family" || d.method == "both")
    j["family"] = gf_json(diagmat::gf_family(row, col, mode, 1, 4 * (1u << width) + 12));
  if (d.method == "symbolic" || d.method == "both") j["symbolic"] = gf_json(diagmat::gf_symbolic(row, col, mode));
  if (d.method == "both") j["agree"] = j["family"]["gf"] == j["symbolic"]["gf"];
  out.emit(j);
}

// -------------------------------------------------------------- parking

struct ParkingArgs {
  long n = 3, a = 1;
  int moments = 0;
  bool histogram = false, scaled = false;
  std::string bijection;
};

json forest_json(const parking::LabeledForest& f) {
  json p = json::object();
  for (auto [child, par] : f.parent) p[std::to_string(child)] = par;
  return {{"a", f.a}, {"n", f.n}, {"parent", p}};
}

void run_parking(const ParkingArgs& p, const Output& out) {
  require(p.n >= 1 && p.a >= 1, "need --n >= 1 and --a >= 1");
  json j;
  j["n"] = p.n;
  j["a"] = p.a;
  if (!p.bijection.empty()) {
    parking::ParkingFunction pf;
    for (char c : p.bijection) {
      require(c >= '1' && c <= '9', "--bijection takes a digit string such as 5842121");
      pf.push_back(c - '0');
    }
    require(parking::is_a_parking(pf, p.a), "not an a-parking function for the given --a");
    auto f = parking::parking_to_forest(pf, static_cast<std::size_t>(p.a));
    j["parking"] = p.bijection;
    j["forest"] = forest_json(f);
    std::string back;
    for (long v : parking::forest_to_parking(f)) back += std::to_string(v);
    j["round_trip"] = back;
    out.emit(j);
    return;
  }
  if (p.histogram) {
    auto d = parking::distribution_export(p.n, p.a);
    json rows = json::array();
    for (const auto& r : d.rows) rows.push_back({{"area", r.area}, {"count", to_string(r.count)}});
    j["rows"] = rows;
    j["mean"] = exact(d.mean);
    j["variance"] = exact(d.variance);
    out.emit(j, parking::distribution_csv(d, p.scaled));
    return;
  }
  j["count"] = to_string(parking::count_parking(p.n, p.a));
  j["expected_area"] = exact(parking::expectation_area(p.n, p.a));
  j["expected_sum"] = exact(parking::expectation_sum(p.n, p.a));
  if (p.moments > 0) {
    json m = json::array();
    for (int k = 1; k <= p.moments; ++k) m.push_back(exact(parking::factorial_moment(k, p.n, p.a)));
    j["factorial_moments"] = m;
  }
  out.emit(j);
}

// ------------------------------------------------------------ quicksort

struct QuicksortArgs {
  std::string variant = "nulla";
  long n = 10;
  bool pgf = false;
  int moments = 0;
  long means = 0;
  int scaled = 0;
  bool mc = false;
  int k = 3;
  long trials = 10000;
  std::uint64_t seed = 1;
};

void run_quicksort(const QuicksortArgs& q, const Output& out) {
  require(q.n >= 0, "--n must be >= 0");
  json j;
  std::ostringstream csv;
  if (q.mc) {
    quicksort::MCConfig cfg{q.n, q.k, q.trials, q.seed};
    auto r = quicksort::mc_run(cfg);
    j = {{"n", q.n}, {"k", q.k}, {"trials", q.trials}, {"seed", q.seed},
         {"mean", r.mean}, {"variance", r.variance}, {"std_error", r.std_error}, {"prng", "mt19937_64"}};
    out.emit(j);
    return;
  }
  const auto v = quicksort::parse_variant(q.variant);
  j["variant"] = quicksort::variant_name(v);
  if (q.means > 0) {
    auto m = quicksort::mean_sequence(v, q.means);
    json rows = json::array();
    csv << "n,mean,float\n";
    for (long i = 0; i < q.means; ++i) {
      rows.push_back({{"n", i + 1}, {"mean", exact(m[i])}});
      csv << i + 1 << ',' << m[i].str() << ',' << m[i].to_double() << '\n';
    }
    j["rows"] = rows;
    out.emit(j, csv.str());
    return;
  }
  j["n"] = q.n;
  if (q.pgf) {
    require(q.n <= 200, "full PGFs are limited to n <= 200; use --moments");
    auto p = quicksort::pgf(v, q.n);
    j["pgf"] = to_string(p);
    j["coeffs"] = coeff_list(p);
  }
  if (q.moments > 0) {
    auto t = quicksort::moments(v, q.n, q.moments);
    j["mean"] = exact(t.mean);
    json c = json::array();
    for (int r = 2; r <= q.moments; ++r) c.push_back({{"order", r}, {"central", exact(t.central[r])}});
    j["central_moments"] = c;
  }
  if (q.scaled >= 3) {
    json s = json::array();
    auto xs = quicksort::scaled_moments(v, q.n, q.scaled);
    for (std::size_t i = 0; i < xs.size(); ++i) s.push_back({{"order", i + 3}, {"scaled", xs[i]}});
    j["scaled_moments"] = s;
  }
  out.emit(j);
}

// --------------------------------------------------------------- queens

struct QueensArgs {
  std::string family;
  std::string params;
  bool optimize = false, verify = false, outlines = false, formula_model = false;
  int starts = 20;
  std::uint64_t seed = 1;
  int board = 0;
  int exhaustive = 0;
};

// Nearest fraction with denominator <= 1000, if within 1e-7.
std::optional<Rational> snap(double x) {
  long p0 = 0, q0 = 1, p1 = 1, q1 = 0;
  double r = x;
  for (int i = 0; i < 40; ++i) {
    long a = static_cast<long>(std::floor(r));
    long p2 = a * p1 + p0, q2 = a * q1 + q0;
    if (q2 > 1000) break;
    p0 = p1, q0 = q1, p1 = p2, q1 = q2;
    if (std::abs(static_cast<double>(p1) / q1 - x) < 1e-7) return Rational(Integer(p1), Integer(q1));
    double frac = r - a;
    if (frac < 1e-15) break;
    r = 1 / frac;
  }
  return std::nullopt;
}

json params_json(queens::Family f, const std::vector<std::string>& vals) {
  json p = json::object();
  const auto& names = queens::info(f).params;
  for (std::size_t i = 0; i < names.size(); ++i) p[names[i]] = vals[i];
  return p;
}

void run_queens(const QueensArgs& q, const Output& out) {
  json j;
  if (q.exhaustive > 0) {
    j = {{"n", q.exhaustive}, {"a", queens::exhaustive_small(q.exhaustive)}};
    out.emit(j);
    return;
  }
  require(!q.family.empty(), "--family is required");
  const auto f = queens::parse_family(q.family);
  const std::size_t dim = queens::info(f).params.size();
  j["family"] = q.family;

  if (q.optimize) {
    queens::OptimizeOptions o;
    o.starts = q.starts;
    o.seed = q.seed;
    if (q.formula_model) o.model = queens::BlackModel::Formula;
    auto r = queens::optimize(f, o);
    std::vector<std::string> shown;
    std::vector<Rational> snapped;
    for (double x : r.params) {
      if (auto s = snap(x)) snapped.push_back(*s);
      shown.push_back(std::to_string(x));
    }
    bool exact_hit = false;
    if (snapped.size() == dim && !queens::violated(f, snapped)) {
      auto a = queens::areas(f, snapped);
      if (a.white == a.geometric_black && std::abs(a.white.to_double() - r.value) < 1e-9) {
        exact_hit = true;
        for (std::size_t i = 0; i < dim; ++i) shown[i] = snapped[i].str();
        j["params"] = params_json(f, shown);
        j["area"] = a.white.str();
      }
    }
    if (!exact_hit) j["params"] = params_json(f, shown);
    json pf = json::object();
    for (std::size_t i = 0; i < dim; ++i) pf[queens::info(f).params[i]] = r.params[i];
    j["params_float"] = pf;
    j["white"] = r.white;
    j["black"] = r.black;
    j["area_float"] = r.value;
    j["exact"] = exact_hit;
    j["feasible_starts"] = r.feasible_starts;
    out.emit(j);
    return;
  }

  auto vals = split(q.params);
  require(vals.size() == dim, queens::info(f).name + " takes " + std::to_string(dim) + " comma-separated --params");
  if (q.verify) {
    std::vector<queens::Real> p;
    for (const auto& v : vals) p.emplace_back(v);
    auto r = queens::verify_candidate(f, p);
    j["params"] = params_json(f, vals);
    j["white"] = r.white.str(30);
    j["black"] = r.black.str(30);
    j["balanced"] = r.balanced;
    j["stationary"] = r.stationary;
    j["best_gain"] = r.best_gain;
    j["formula_matches_geometry"] = r.formula_matches_geometry;
    out.emit(j);
    return;
  }

  // exact when every parameter parses as a fraction
  std::vector<Rational> exact_p;
  try {
    for (const auto& v : vals) exact_p.push_back(Rational::parse(v));
  } catch (const std::exception&) {
    exact_p.clear();
  }
  std::vector<double> dp;
  for (const auto& v : vals) dp.push_back(exact_p.empty() ? std::stod(v) : Rational::parse(v).to_double());

  if (q.outlines) {
    queens::require_feasible(f, dp);
    out.emit({}, queens::outlines_csv(f, dp));
    return;
  }
  if (q.board > 0) {
    auto b = exact_p.empty() ? queens::rasterize(f, dp, q.board) : queens::rasterize(f, exact_p, q.board);
    const long white = static_cast<long>(b.count()), black = queens::discrete_black_count(b);
    j["n"] = q.board;
    j["white"] = white;
    j["black"] = black;
    j["min"] = std::min(white, black);
    j["board"] = queens::board_ascii(b);
    out.emit(j, queens::board_csv(b));
    return;
  }
  j["params"] = params_json(f, vals);
  if (!exact_p.empty()) {
    auto a = queens::areas(f, exact_p);
    j["white"] = exact(a.white);
    j["black"] = exact(a.black);
    j["geometric_black"] = exact(a.geometric_black);
    j["in_window"] = a.in_window;
    if (!a.in_window) j["warning"] = a.warning;
  } else {
    auto a = queens::areas(f, dp);
    j["white"] = a.white;
    j["black"] = a.black;
    j["geometric_black"] = a.geometric_black;
    j["in_window"] = a.in_window;
    if (!a.in_window) j["warning"] = a.warning;
  }
  out.emit(j);
}

int fail(const std::string& type, const std::string& message, int code) {
  json e = {{"error", {{"type", type}, {"message", message}, {"exit_code", code}}}};
  std::cout << e.dump(2) << '\n';
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact experimental-mathematics toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format: json (default) or csv")
      ->check(CLI::IsMember({"json", "csv"}));
  app.add_option("--out", out.path, "Write output to this file instead of stdout");

  GuessArgs g;
  auto* guess = app.add_subcommand("guess", "Guess a recurrence and generating function from terms");
  guess->add_option("--seq", g.seq, "Comma-separated terms, e.g. 1,4,15,56")->required();
  guess->add_option("--offset", g.offset, "Index of the first term in the generating function (default 1)");
  guess->add_flag("--symmetric", g.symmetric, "Require a palindromic characteristic polynomial");
  guess->add_flag("--holonomic", g.holonomic, "Find a recurrence with polynomial coefficients instead");
  guess->add_option("--max-c", g.max_c, "Holonomic search bound on order + degree (default 8)");

  SpanningArgs s;
  auto* span = app.add_subcommand("spanning", "Spanning trees of k x n grids.\nCSV: k,n,count or k,n,resistance,float");
  span->add_option("--k", s.k, "Grid width")->required();
  span->add_option("--n-lo", s.n_lo, "First length");
  span->add_option("--n-hi", s.n_hi, "Last length");
  span->add_flag("--gf", s.gf, "Generating function in the length");
  span->add_flag("--two-forest", s.two_forest, "Generating function of corner-separating two-forests");
  span->add_flag("--vertical", s.vertical, "Bivariate GF marking vertical edges by v");
  span->add_flag("--resistance", s.resistance, "Effective resistance between opposite corners");

  DiagmatArgs d;
  auto* diag = app.add_subcommand("diagmat", "Almost-diagonal Toeplitz determinants and permanents");
  diag->add_option("--row", d.row, "Diagonal and superdiagonals, e.g. 2,3")->required();
  diag->add_option("--col", d.col, "Diagonal and subdiagonals, e.g. 2,4,5")->required();
  diag->add_option("--mode", d.mode, "det or perm");
  diag->add_option("--method", d.method, "family, symbolic or both")
      ->check(CLI::IsMember({"family", "symbolic", "both"}));
  diag->add_option("--terms", d.terms, "Also list the first N values");

  ParkingArgs p;
  auto* park = app.add_subcommand("parking", "a-parking functions.\nCSV (--histogram): area,count or z,density with --scaled");
  park->add_option("--n", p.n, "Length");
  park->add_option("--a", p.a, "Parameter a (1 = classical)");
  park->add_option("--moments", p.moments, "Factorial moments of the area up to this order");
  park->add_flag("--histogram", p.histogram, "Area distribution");
  park->add_flag("--scaled", p.scaled, "Standardize the histogram");
  park->add_option("--bijection", p.bijection, "Map a parking function (digit string) to its forest");

  QuicksortArgs q;
  auto* qs = app.add_subcommand("quicksort", "Quicksort cost distributions.\nCSV (--means): n,mean,float");
  qs->add_option("--variant", q.variant,
                 "nulla, swap1..swap5, dual, dualswaps, threepivot or kpivot:K");
  qs->add_option("--n", q.n, "List length");
  qs->add_flag("--pgf", q.pgf, "Full probability generating function");
  qs->add_option("--moments", q.moments, "Mean and central moments up to this order");
  qs->add_option("--means", q.means, "Means for n = 1..N");
  qs->add_option("--scaled", q.scaled, "Standardized moments 3..R");
  qs->add_flag("--mc", q.mc, "Monte Carlo k-pivot comparisons");
  qs->add_option("--k", q.k, "Pivot count for --mc");
  qs->add_option("--trials", q.trials, "Trials for --mc");
  qs->add_option("--seed", q.seed, "Seed for --mc");

  QueensArgs qa;
  auto* qn = app.add_subcommand("queens", "Peaceable queens configurations.\nCSV: x,y,state (--board) or region,polygon,vertex,x,y (--outlines)");
  qn->add_option("--family", qa.family,
                 "jubin, rectangle, parallelogram, triangle, hexagon, two-squares, two-triangles, "
                 "two-triangles-opposite or square-triangle");
  qn->add_option("--params", qa.params, "Comma-separated parameters (fractions are exact)");
  qn->add_flag("--optimize", qa.optimize, "Multistart search for the best balanced configuration");
  qn->add_flag("--formula-model", qa.formula_model, "Optimize with the closed-form black area");
  qn->add_option("--starts", qa.starts, "Starts for --optimize");
  qn->add_option("--seed", qa.seed, "Seed for --optimize");
  qn->add_flag("--verify", qa.verify, "Check balance and stationarity at high precision");
  qn->add_option("--board", qa.board, "Rasterize onto an N x N board");
  qn->add_flag("--outlines", qa.outlines, "Region outlines as CSV");
  qn->add_option("--exhaustive", qa.exhaustive, "Exact optimum on an N x N board (N <= 5)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what(), kUsage);
  }

  try {
    if (guess->parsed()) run_guess(g, out);
    else if (span->parsed()) run_spanning(s, out);
    else if (diag->parsed()) run_diagmat(d, out);
    else if (park->parsed()) run_parking(p, out);
    else if (qs->parsed()) run_quicksort(q, out);
    else if (qn->parsed()) run_queens(qa, out);
  } catch (const UsageError& e) {
    return fail("usage", e.what(), kUsage);
  } catch (const queens::Infeasible& e) {
    return fail("infeasible", e.what(), kUsage);
  } catch (const InsufficientData& e) {
    return fail("insufficient_data", e.what(), kUsage);
  } catch (const std::invalid_argument& e) {
    return fail("invalid_argument", e.what(), kUsage);
  } catch (const std::exception& e) {
    return fail("failure", e.what(), kFailure);
  }
  return kOk;
}
