#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "cliffgen/ckseries.hpp"
#include "cliffgen/classical.hpp"
#include "cliffgen/error.hpp"
#include "cliffgen/fueter.hpp"
#include "cliffgen/parser.hpp"
#include "cliffgen/simd/radial_kernels.hpp"
#include "cliffgen/verify.hpp"

namespace cliffgen::cli {

namespace {

using LD = long double;
using json = nlohmann::json;

constexpr int kPass = 0;
constexpr int kNumericFailure = 1;
constexpr int kUsage = 2;

struct Point {
  double x0, r;
};

struct GridArg {
  std::vector<Point> points;
  std::string text;
};

std::vector<double> linspace(double a, double b, long n) {
  std::vector<double> out;
  for (long i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * static_cast<double>(i) / (n - 1));
  return out;
}

double parse_double(const std::string& s, const std::string& what) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw PreconditionError("bad number '" + s + "' in " + what);
  }
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream is(s);
  while (std::getline(is, cur, sep)) out.push_back(cur);
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

// x0=start:stop:count,r=start:stop:count; x0 outer, r inner
GridArg parse_grid(const std::string& text) {
  std::optional<std::vector<double>> x0s, rs;
  for (const auto& part : split(text, ',')) {
    const auto eq = part.find('=');
    if (eq == std::string::npos) throw PreconditionError("grid entry '" + part + "' is not var=start:stop:count");
    const std::string var = part.substr(0, eq);
    const auto f = split(part.substr(eq + 1), ':');
    if (f.size() != 3) throw PreconditionError("grid entry '" + part + "' is not var=start:stop:count");
    const double a = parse_double(f[0], "--grid"), b = parse_double(f[1], "--grid");
    const double c = parse_double(f[2], "--grid");
    if (c < 0 || c != std::floor(c)) throw PreconditionError("grid count must be a non-negative integer");
    auto vals = linspace(a, b, static_cast<long>(c));
    if (var == "x0") {
      x0s = std::move(vals);
    } else if (var == "r") {
      rs = std::move(vals);
    } else {
      throw PreconditionError("unknown grid variable '" + var + "' (use x0 and r)");
    }
  }
  if (!x0s || !rs) throw PreconditionError("grid needs both x0 and r ranges");
  GridArg g{{}, text};
  for (double x0 : *x0s) {
    for (double r : *rs) g.points.push_back({x0, r});
  }
  return g;
}

GridArg parse_at(const std::string& text) {
  const auto f = split(text, ',');
  if (f.size() != 2) throw PreconditionError("--at expects x0,r");
  return {{{parse_double(f[0], "--at"), parse_double(f[1], "--at")}}, "at " + text};
}

void require_positive_r(const GridArg& g) {
  for (const auto& p : g.points) {
    if (!(p.r > 0)) throw PreconditionError("grid must avoid r <= 0");
  }
}

std::string num(double v) {
  std::ostringstream os;
  os << std::setprecision(17) << v;
  return os.str();
}

// A table written as CSV (comment lines, header, rows) or as one JSON document.
struct Table {
  std::vector<std::string> comments;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;

  void write(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      json doc;
      doc["comments"] = comments;
      doc["columns"] = columns;
      json rs = json::array();
      for (const auto& row : rows) {
        json o = json::object();
        for (std::size_t i = 0; i < columns.size(); ++i) {
          if (std::isfinite(row[i])) {
            o[columns[i]] = row[i];
          } else {
            o[columns[i]] = nullptr;
          }
        }
        rs.push_back(std::move(o));
      }
      doc["rows"] = std::move(rs);
      os << doc.dump(1) << '\n';
      return;
    }
    for (const auto& c : comments) os << "# " << c << '\n';
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << num(row[i]);
      os << '\n';
    }
  }
};

// Output goes to --out when given.
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_) throw PreconditionError("cannot open --out path '" + path + "'");
    }
    os_ = path.empty() ? &fallback : &file_;
  }
  std::ostream& os() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

struct Common {
  std::optional<int> m, k, trunc, basis_index;
  std::optional<double> alpha, tol;
  std::string grid, at, format = "csv", out;
};

void add_common(CLI::App* cmd, Common& c, bool tables) {
  cmd->add_option("--m", c.m, "dimension m (odd)");
  cmd->add_option("--k", c.k, "degree k of P_k");
  cmd->add_option("--alpha", c.alpha, "Gegenbauer alpha");
  cmd->add_option("--trunc", c.trunc, "series truncation");
  cmd->add_option("--tol", c.tol, "threshold");
  cmd->add_option("--out", c.out, "write output to this file");
  if (tables) {
    cmd->add_option("--grid", c.grid, "x0=start:stop:count,r=start:stop:count");
    cmd->add_option("--at", c.at, "single point x0,r");
    cmd->add_option("--format", c.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--basis-index", c.basis_index, "which basis element of M_k to use as P_k");
  }
}

GridArg points_of(const Common& c, const std::function<GridArg()>& fallback) {
  if (!c.grid.empty() && !c.at.empty()) throw PreconditionError("use either --grid or --at");
  GridArg g = !c.grid.empty() ? parse_grid(c.grid) : !c.at.empty() ? parse_at(c.at) : fallback();
  require_positive_r(g);
  return g;
}

void check_mk(int m, int k) {
  check_dimension(m);
  require_odd(m);
  if (k < 0) throw PreconditionError("k must be >= 0");
}

bool is_integer(double a) { return std::floor(a) == a; }

void check_gegenbauer_domain(const GridArg& g, double alpha) {
  for (const auto& p : g.points) {
    if (p.r < 1) continue;
    if (is_integer(alpha) && p.r != 1) continue;
    throw PreconditionError("gegenbauer targets need |x| < 1");
  }
}

std::vector<long double> unit_direction(int m) {
  // u = (1, 2, ..., m) / |.|, so every blade of x shows up
  std::vector<long double> u(m);
  long double n = 0;
  for (int j = 0; j < m; ++j) {
    u[j] = j + 1;
    n += u[j] * u[j];
  }
  for (auto& v : u) v /= std::sqrt(n);
  return u;
}

// ---------------------------------------------------------------- verify

json report_json(const VerificationReport& r) {
  json params = json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  json j{{"identity_id", r.identity_id}, {"params", params},          {"grid", r.grid},
         {"max_abs_error", r.max_abs_error}, {"threshold", r.threshold}, {"exact", r.exact},
         {"passed", r.passed},           {"runtime_ms", r.runtime_ms}, {"worst_at", r.worst_at}};
  if (!std::isfinite(r.max_abs_error)) j["max_abs_error"] = nullptr;
  if (!r.error.empty()) j["error"] = r.error;
  return j;
}

int cmd_verify(const std::string& suite, const Common& c, std::ostream& out) {
  if (!is_suite(suite)) throw PreconditionError("unknown suite '" + suite + "'");
  SuiteOptions o;
  o.m = c.m;
  o.k = c.k;
  o.alpha = c.alpha;
  o.tol = c.tol;
  o.trunc = c.trunc;
  Sink sink(c.out, out);
  const bool ok = run_suite(suite, o, [&](const VerificationReport& r) { sink.os() << report_json(r).dump() << std::endl; });
  return ok ? kPass : kNumericFailure;
}

// ---------------------------------------------------------------- eval

struct Evaluator {
  std::function<RadialPair<LD>(LD, LD)> radial;
  std::function<Multivector<LD>(LD, std::span<const LD>)> full;
  std::vector<std::string> scale;
};

int cmd_eval(const std::string& target, const std::string& h, const Common& c, std::ostream& out) {
  const int m = c.m.value_or(3), k = c.k.value_or(0);
  check_mk(m, k);
  const CliffordPolynomial pk = default_pk(m, k, c.basis_index.value_or(0));
  const int N = fueter_order(m, k);
  const bool gegen = target.rfind("gegenbauer", 0) == 0;
  const double alpha = c.alpha.value_or(1.5);
  if (gegen && alpha_forbidden(alpha, m, k)) throw PreconditionError("alpha must avoid -1, ..., -N");
  if (!h.empty() && target != "ft") throw PreconditionError("--h only applies to the ft target");

  const GridArg g = points_of(c, [&] {
    return gegen ? parse_grid("x0=-0.3:0.3:7,r=0.2:0.8:7") : parse_grid("x0=-1:1:11,r=0.2:2:10");
  });
  if (gegen) check_gegenbauer_domain(g, alpha);

  Evaluator ev;
  const std::string nstr = "N = k + (m-1)/2 = " + std::to_string(N);
  if (target == "hermite-closed" || target == "gegenbauer-closed" || target == "ft") {
    std::shared_ptr<FtResult> f;
    if (target == "hermite-closed") {
      f = std::make_shared<FtResult>(hermite_gf_closed(m, k, pk));
      ev.scale = {"scale: CK[exp(-|x|^2) P_k] = Ft[exp(z^2), P_k] / ((-2)^N (2k+m-1)!!), " + nstr};
    } else if (target == "gegenbauer-closed") {
      f = std::make_shared<FtResult>(gegenbauer_gf_closed(m, k, alpha, pk));
      ev.scale = {"scale: CK[(1-|x|^2)^alpha P_k] = Ft[(1+z^2)^(alpha+N), P_k] / ((-2)^N (2k+m-1)!! prod_{j=1..N}(alpha+j)), " +
                  nstr};
    } else {
      if (h.empty()) throw PreconditionError("ft needs --h <expression in z>");
      f = std::make_shared<FtResult>(ft_transform(expr::parse(h), m, k, pk));
      ev.scale = {"scale: raw Ft[h, P_k], A = (2k+m-1)!! Re D_r(N)[h], B = (2k+m-1)!! Im D^r(N)[h], no normalization, " + nstr,
                  "h = " + h};
    }
    ev.radial = [f](LD x0, LD r) { return f->radial<LD>(x0, r); };
    ev.full = [f](LD x0, std::span<const LD> x) { return f->evaluate<LD>(x0, x); };
  } else if (target == "hermite-series") {
    auto s = std::make_shared<HermiteSeries>(m, k, pk, c.trunc.value_or(30));
    ev.scale = {"scale: CK[exp(-|x|^2) P_k], x0-series truncated after x0^" + std::to_string(s->truncation())};
    ev.radial = [s](LD x0, LD r) { return s->radial(x0, r); };
    ev.full = [s](LD x0, std::span<const LD> x) { return s->evaluate(x0, x); };
  } else if (target == "gegenbauer-series") {
    auto s = std::make_shared<GegenbauerSeries>(m, k, alpha, pk, c.trunc.value_or(25));
    ev.scale = {"scale: CK[(1-|x|^2)^alpha P_k], x0-series truncated after x0^" + std::to_string(s->truncation())};
    ev.radial = [s](LD x0, LD r) { return s->radial(x0, r); };
    ev.full = [s](LD x0, std::span<const LD> x) { return s->evaluate(x0, x); };
  } else {
    throw PreconditionError("unknown eval target '" + target +
                            "' (hermite-closed, hermite-series, gegenbauer-closed, gegenbauer-series, ft)");
  }

  const auto u = unit_direction(m);
  std::string udesc;
  for (int j = 0; j < m; ++j) udesc += (j ? "," : "") + num(static_cast<double>(u[j]));
  Table t;
  t.comments.push_back("target = " + target + ", m = " + std::to_string(m) + ", k = " + std::to_string(k) +
                       (gegen ? ", alpha = " + num(alpha) : ""));
  t.comments.insert(t.comments.end(), ev.scale.begin(), ev.scale.end());
  t.comments.push_back("value = (A + w B) P_k(x) with w = x/r; mv_* columns at x = r u, u = (" + udesc + ")");
  t.comments.push_back("P_k = " + pk.to_string());
  t.comments.push_back("grid = " + g.text);
  t.columns = {"x0", "r", "A", "B"};
  const std::uint32_t blades = 1u << m;
  for (std::uint32_t b = 0; b < blades; ++b) t.columns.push_back(b == 0 ? "mv_1" : "mv_" + blade_name(b));
  for (const auto& p : g.points) {
    const auto ab = ev.radial(p.x0, p.r);
    std::vector<LD> x(m);
    for (int j = 0; j < m; ++j) x[j] = p.r * u[j];
    const auto mv = ev.full(p.x0, x);
    std::vector<double> row{p.x0, p.r, static_cast<double>(ab.a), static_cast<double>(ab.b)};
    for (std::uint32_t b = 0; b < blades; ++b) row.push_back(static_cast<double>(mv.coefficient(b)));
    t.rows.push_back(std::move(row));
  }
  Sink sink(c.out, out);
  t.write(sink.os(), c.format);
  return kPass;
}

// ---------------------------------------------------------------- corollaries

int cmd_corollaries(int section, const Common& c, std::ostream& out) {
  if (section != 3 && section != 4) throw PreconditionError("--section must be 3 or 4");
  const int m = c.m.value_or(3), k = c.k.value_or(0);
  check_mk(m, k);
  const double alpha = c.alpha.value_or(1.5);
  const int terms = c.trunc.value_or(section == 3 ? 30 : 25);
  if (terms < 0) throw PreconditionError("--trunc must be >= 0");
  const double tol = c.tol.value_or(section == 3 ? 1e-9 : 1e-8);
  GridArg g = points_of(c, [&] {
    // Jacobi sums: |x0| <= (1 - r)/2, inside the convergence disc of the x0-series
    GridArg d = section == 3 ? parse_grid("x0=-1:1:11,r=0.2:2:10") : parse_grid("x0=-0.2:0.2:5,r=0.2:0.6:5");
    if (section == 3) {
      d.points.push_back({0.4, 0.9});
      d.points.push_back({0, 0.7});
      d.text += " + (0.4,0.9),(0,0.7)";
    } else {
      d.points.push_back({0.2, 0.5});
      d.text += " + (0.2,0.5)";
    }
    return d;
  });
  LD M = 1;
  if (section == 4) {
    if (alpha_forbidden(alpha, m, k)) throw PreconditionError("alpha must avoid -1, ..., -N");
    for (const auto& p : g.points) {
      if (!(p.r < 1)) throw PreconditionError("section 4 needs r in (0, 1)");
    }
    M = gegenbauer_M(alpha, m, k);
  }
  Table t;
  t.columns = {"x0", "r", "lhs_i", "rhs_i", "err_i", "lhs_ii", "rhs_ii", "err_ii"};
  LD worst_i = 0, worst_ii = 0;
  for (const auto& p : g.points) {
    RadialPair<LD> l, rr;
    if (section == 3) {
      l = corollary3_lhs(m, k, p.x0, p.r);
      rr = corollary3_rhs(m, k, p.x0, p.r, terms);
    } else {
      l = corollary4_lhs(m, k, alpha, p.x0, p.r);
      rr = corollary4_rhs(m, k, alpha, p.x0, p.r, terms);
    }
    const LD ei = mixed_error(l.a / M, rr.a / M), eii = mixed_error(l.b / M, rr.b / M);
    worst_i = std::max(worst_i, ei);
    worst_ii = std::max(worst_ii, eii);
    t.rows.push_back({p.x0, p.r, static_cast<double>(l.a), static_cast<double>(rr.a), static_cast<double>(ei),
                      static_cast<double>(l.b), static_cast<double>(rr.b), static_cast<double>(eii)});
  }
  const bool pass = worst_i < tol && worst_ii < tol;
  t.comments.push_back("corollary " + std::to_string(section) + ", m = " + std::to_string(m) + ", k = " +
                       std::to_string(k) + (section == 4 ? ", alpha = " + num(alpha) : "") + ", rhs terms = " +
                       std::to_string(terms));
  if (section == 4) {
    t.comments.push_back("both sides carry the factor M = 2^(k+(m+1)/2) prod_{j=1..N}(alpha+j) = " +
                         num(static_cast<double>(M)) + "; errors are taken after dividing by M");
  }
  t.comments.push_back("error = |lhs - rhs| / max(1, |rhs|)");
  t.comments.push_back("grid = " + g.text);
  t.comments.push_back("max error (i) = " + num(static_cast<double>(worst_i)) + ", (ii) = " +
                       num(static_cast<double>(worst_ii)) + ", tol = " + num(tol) + (pass ? ", PASS" : ", FAIL"));
  Sink sink(c.out, out);
  t.write(sink.os(), c.format);
  return pass ? kPass : kNumericFailure;
}

// ---------------------------------------------------------------- bench

std::vector<Point> bench_points(long n, bool gegen) {
  // golden-ratio sequence in x0, stratified in r
  const double phi = 0.6180339887498949;
  std::vector<Point> out;
  for (long i = 0; i < n; ++i) {
    const double u = std::fmod(phi * static_cast<double>(i + 1), 1.0);
    const double v = (static_cast<double>(i) + 0.5) / static_cast<double>(n);
    if (gegen) {
      out.push_back({-0.1 + 0.2 * u, 0.2 + 0.4 * v});
    } else {
      out.push_back({-1 + 2 * u, 0.2 + 1.8 * v});
    }
  }
  return out;
}

template <class F>
double time_ms(int reps, F&& f) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) f();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / std::max(reps, 1);
}

int cmd_bench(const std::string& target, const std::string& points_list, int reps, const Common& c,
              std::ostream& out) {
  if (target != "hermite" && target != "gegenbauer") throw PreconditionError("bench target is hermite or gegenbauer");
  if (reps < 1) throw PreconditionError("--reps must be >= 1");
  const bool gegen = target == "gegenbauer";
  const int m = c.m.value_or(3), k = c.k.value_or(0);
  check_mk(m, k);
  const double alpha = c.alpha.value_or(1.5);
  if (gegen && alpha_forbidden(alpha, m, k)) throw PreconditionError("alpha must avoid -1, ..., -N");
  const CliffordPolynomial pk = default_pk(m, k, c.basis_index.value_or(0));
  const int N = c.trunc.value_or(gegen ? 25 : 30);
  if (N < 0) throw PreconditionError("--trunc must be >= 0");

  std::vector<std::vector<Point>> sets;
  std::string grid_text;
  if (!c.grid.empty() || !c.at.empty()) {
    GridArg g = points_of(c, [] { return GridArg{}; });
    if (gegen) check_gegenbauer_domain(g, alpha);
    if (!g.points.empty()) sets.push_back(std::move(g.points));
    grid_text = g.text;
  } else {
    for (const auto& s : split(points_list, ',')) {
      if (s.empty()) continue;
      const double n = parse_double(s, "--points");
      if (n < 0 || n != std::floor(n)) throw PreconditionError("--points entries must be non-negative integers");
      sets.push_back(bench_points(static_cast<long>(n), gegen));
    }
    grid_text = gegen ? "quasi-random x0 in [-0.1,0.1], r in [0.2,0.6]" : "quasi-random x0 in [-1,1], r in [0.2,2]";
  }

  const FtResult closed = gegen ? gegenbauer_gf_closed(m, k, alpha, pk) : hermite_gf_closed(m, k, pk);
  std::optional<HermiteSeries> hs;
  std::optional<GegenbauerSeries> gs;
  if (gegen) {
    gs.emplace(m, k, alpha, pk, N);
  } else {
    hs.emplace(m, k, pk, N);
  }
  auto series_ref = [&](LD x0, LD r) { return gegen ? gs->radial(x0, r) : hs->radial(x0, r); };
  auto batch = [&](std::span<const double> x0, std::span<const double> r, std::span<double> A, std::span<double> B,
                   simd::Isa isa) {
    if (gegen) {
      gs->radial_batch(x0, r, A, B, isa);
    } else {
      hs->radial_batch(x0, r, A, B, isa);
    }
  };

  Table t;
  t.comments.push_back("bench " + target + ", m = " + std::to_string(m) + ", k = " + std::to_string(k) +
                       (gegen ? ", alpha = " + num(alpha) : "") + ", N = " + std::to_string(N) + ", reps = " +
                       std::to_string(reps));
  t.comments.push_back("points: " + grid_text);
  t.comments.push_back(std::string("active isa = ") + simd::isa_name(simd::active_isa()) +
                       (simd::avx2_available() ? "" : " (avx2 not available, avx2 column is empty)"));
  t.comments.push_back("max_err = max |series - closed| / max(1, |closed|) over A and B; batch_diff = max |batch - series_ref|");
  t.columns = {"points",   "closed_ms",        "series_ref_ms", "batch_scalar_ms",
               "batch_avx2_ms", "max_err",    "batch_diff",    "simd_mismatch"};
  for (const auto& pts : sets) {
    const std::size_t n = pts.size();
    std::vector<double> x0(n), r(n), A(n), B(n), A2(n), B2(n);
    for (std::size_t i = 0; i < n; ++i) {
      x0[i] = pts[i].x0;
      r[i] = pts[i].r;
    }
    std::vector<RadialPair<double>> cv(n);
    std::vector<RadialPair<LD>> sv(n);
    const double closed_ms = time_ms(reps, [&] {
      for (std::size_t i = 0; i < n; ++i) cv[i] = closed.radial<double>(x0[i], r[i]);
    });
    const double ref_ms = time_ms(reps, [&] {
      for (std::size_t i = 0; i < n; ++i) sv[i] = series_ref(x0[i], r[i]);
    });
    const double scalar_ms = time_ms(reps, [&] { batch(x0, r, A, B, simd::Isa::Scalar); });
    double avx_ms = std::numeric_limits<double>::quiet_NaN();
    double mismatch = 0;
    if (simd::avx2_available()) {
      avx_ms = time_ms(reps, [&] { batch(x0, r, A2, B2, simd::Isa::Avx2); });
      for (std::size_t i = 0; i < n; ++i) mismatch += (A[i] != A2[i]) + (B[i] != B2[i]);
    }
    LD err = 0, diff = 0;
    for (std::size_t i = 0; i < n; ++i) {
      err = std::max({err, mixed_error<LD>(sv[i].a, cv[i].a), mixed_error<LD>(sv[i].b, cv[i].b)});
      diff = std::max({diff, std::abs(A[i] - sv[i].a), std::abs(B[i] - sv[i].b)});
    }
    t.rows.push_back({static_cast<double>(n), closed_ms, ref_ms, scalar_ms, avx_ms, static_cast<double>(err),
                      static_cast<double>(diff), mismatch});
  }
  Sink sink(c.out, out);
  t.write(sink.os(), c.format);
  return kPass;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"cliffgen-cli: Clifford-Hermite / Clifford-Gegenbauer generating functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "cliffgen 1.0.0");

  Common vc, ec, cc, bc;
  std::string suite, target, h, points = "100,1000,10000", bench_target = "hermite";
  int section = 0, reps = 3;

  auto* verify = app.add_subcommand("verify", "run an identity suite, JSON lines on stdout");
  verify->add_option("suite", suite, "suite id")->required();
  add_common(verify, vc, false);

  auto* eval = app.add_subcommand("eval", "evaluate a closed form, series or Fueter transform on a grid");
  eval->add_option("target", target, "hermite-closed | hermite-series | gegenbauer-closed | gegenbauer-series | ft")
      ->required();
  eval->set_help_flag("--help", "print this help message and exit");
  eval->add_option("--h", h, "holomorphic h(z) for the ft target");
  add_common(eval, ec, true);

  auto* cor = app.add_subcommand("corollaries", "check the Laguerre (3) or Jacobi (4) sum identities");
  cor->add_option("--section", section, "3 or 4")->required();
  add_common(cor, cc, true);

  auto* bench = app.add_subcommand("bench", "time series against closed form");
  bench->add_option("--target", bench_target, "hermite | gegenbauer");
  bench->add_option("--points", points, "comma separated point counts");
  bench->add_option("--reps", reps, "repetitions per timing");
  add_common(bench, bc, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (*verify) return cmd_verify(suite, vc, out);
    if (*eval) return cmd_eval(target, h, ec, out);
    if (*cor) return cmd_corollaries(section, cc, out);
    if (*bench) return cmd_bench(bench_target, points, reps, bc, out);
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const DomainError& e) {
    err << "numeric error: " << e.what() << '\n';
    return kNumericFailure;
  }
  return kUsage;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"cliffgen-cli"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace cliffgen::cli
