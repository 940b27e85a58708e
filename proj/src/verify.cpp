#include "cliffgen/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>

#include "cliffgen/ckseries.hpp"
#include "cliffgen/classical.hpp"
#include "cliffgen/fueter.hpp"
#include "cliffgen/parser.hpp"
#include "cliffgen/radial.hpp"

namespace cliffgen {

namespace {

using expr::Expression;
using LD = long double;
using Clock = std::chrono::steady_clock;

std::string fmt(double v) {
  std::ostringstream os;
  os << std::setprecision(6) << v;
  return os.str();
}

std::string fmt_point(LD x0, LD r) { return "x0=" + fmt(static_cast<double>(x0)) + ",r=" + fmt(static_cast<double>(r)); }

std::vector<double> linspace(double a, double b, int n) {
  std::vector<double> out;
  for (int i = 0; i < n; ++i) out.push_back(n == 1 ? a : a + (b - a) * i / (n - 1));
  return out;
}

struct Grid {
  std::vector<double> x0;
  std::vector<double> r;
  std::string spec;
};

Grid make_grid(double x0a, double x0b, int nx0, double ra, double rb, int nr) {
  return {linspace(x0a, x0b, nx0), linspace(ra, rb, nr),
          "x0=" + fmt(x0a) + ":" + fmt(x0b) + ":" + std::to_string(nx0) + ",r=" + fmt(ra) + ":" + fmt(rb) + ":" +
              std::to_string(nr)};
}

// Tracks the worst error of one identity instance.
class Instance {
 public:
  Instance(std::string id, std::vector<std::pair<std::string, std::string>> params, std::string grid,
           double threshold, bool exact = false)
      : start_(Clock::now()) {
    rep_.identity_id = std::move(id);
    rep_.params = std::move(params);
    rep_.grid = std::move(grid);
    rep_.threshold = threshold;
    rep_.exact = exact;
  }

  void observe(LD err, const std::string& where) {
    if (std::isnan(static_cast<double>(err))) err = INFINITY;
    if (err > worst_ || rep_.worst_at.empty()) {
      worst_ = std::max(worst_, err);
      rep_.worst_at = where;
    }
  }

  void exact_mismatch(const std::string& where) {
    ok_exact_ = false;
    if (rep_.worst_at.empty()) rep_.worst_at = where;
  }

  void fail(const std::string& why) { rep_.error = why; }

  bool finish(const ReportSink& sink) {
    rep_.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start_).count();
    if (rep_.exact) {
      rep_.max_abs_error = ok_exact_ ? 0 : 1;
      rep_.passed = ok_exact_ && rep_.error.empty();
    } else {
      rep_.max_abs_error = static_cast<double>(worst_);
      rep_.passed = rep_.error.empty() && worst_ < rep_.threshold;
    }
    if (!rep_.exact && rep_.worst_at.empty()) rep_.worst_at = "-";
    sink(rep_);
    return rep_.passed;
  }

 private:
  VerificationReport rep_;
  LD worst_ = 0;
  bool ok_exact_ = true;
  Clock::time_point start_;
};

// Runs body; domain errors end the instance as a failure, precondition errors propagate.
template <class F>
bool run_instance(Instance inst, const ReportSink& sink, F&& body) {
  try {
    body(inst);
  } catch (const DomainError& e) {
    inst.fail(e.what());
  }
  return inst.finish(sink);
}

using Params = std::vector<std::pair<std::string, std::string>>;

std::vector<int> odd_ms(const SuiteOptions& o, std::vector<int> def) {
  if (o.m) {
    require_odd(*o.m);
    return {*o.m};
  }
  return def;
}

std::vector<int> ks(const SuiteOptions& o, int kmax) {
  if (o.k) {
    if (*o.k < 0) throw PreconditionError("k must be >= 0");
    return {*o.k};
  }
  std::vector<int> out;
  for (int k = 0; k <= kmax; ++k) out.push_back(k);
  return out;
}

std::vector<double> alphas(const SuiteOptions& o, std::vector<double> def) {
  if (o.alpha) return {*o.alpha};
  return def;
}

double tol(const SuiteOptions& o, double def) { return o.tol.value_or(def); }
int trunc(const SuiteOptions& o, int def) {
  const int n = o.trunc.value_or(def);
  if (n < 0) throw PreconditionError("truncation must be >= 0");
  return n;
}

LD pair_error(const RadialPair<LD>& got, const RadialPair<LD>& want) {
  return std::max(mixed_error(got.a, want.a), mixed_error(got.b, want.b));
}

Params mk(int m, int k) { return {{"m", std::to_string(m)}, {"k", std::to_string(k)}}; }

// ---------------------------------------------------------------- coeffs

// Random expressions in (x0, r) that stay finite for r > 0.
Expression random_expression(std::mt19937_64& rng, int depth) {
  std::uniform_int_distribution<int> pick(0, depth == 0 ? 2 : 7);
  std::uniform_real_distribution<double> c(-1.5, 1.5);
  switch (pick(rng)) {
    case 0:
      return expr::x0();
    case 1:
      return expr::r();
    case 2:
      return expr::constant(std::round(c(rng) * 8) / 8);
    case 3:
      return random_expression(rng, depth - 1) + random_expression(rng, depth - 1);
    case 4:
      return random_expression(rng, depth - 1) * random_expression(rng, depth - 1);
    case 5:
      return expr::exp(c(rng) * expr::cos(random_expression(rng, depth - 1)));
    case 6:
      return expr::sin(random_expression(rng, depth - 1));
    default:
      return expr::pow(expr::r(), std::uniform_int_distribution<int>(-2, 4)(rng)) * random_expression(rng, depth - 1);
  }
}

std::vector<Expression> expression_corpus() {
  std::vector<Expression> out;
  for (const char* s : {"exp(x0^2 - r^2)", "cos(2*x0*r)", "sin(2*x0*r)*r^3", "exp(z^2)", "(1 + z^2)^(2.5)",
                        "z^7", "i*z^-3", "r^-2*exp(-r)*cos(x0)"}) {
    out.push_back(expr::parse(s));
  }
  std::mt19937_64 rng(20240611);
  while (out.size() < 16) {
    Expression e = random_expression(rng, 3);
    if (!e.is_constant()) out.push_back(e);
  }
  return out;
}

bool suite_coeffs(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  ok &= run_instance(Instance("a-recursion-vs-closed", {{"n_max", "15"}}, "1<=j<=n<=15", 0, true), sink,
                     [](Instance& in) {
                       for (int n = 1; n <= 15; ++n) {
                         const auto row = a_table_recursive(n);
                         for (int j = 1; j <= n; ++j) {
                           if (row.entries.at(j) != a_coeff(j, n)) {
                             in.exact_mismatch("j=" + std::to_string(j) + ",n=" + std::to_string(n));
                           }
                         }
                       }
                     });
  // the b row lists y_n from the top degree down
  ok &= run_instance(Instance("b-vs-bessel", {{"n_max", "10"}, {"index", "y_n[n-j]"}}, "0<=j<=n<=10", 0, true), sink,
                     [](Instance& in) {
    for (int n = 0; n <= 10; ++n) {
      const auto y = bessel_poly_coeffs(n);
      for (int j = 0; j <= n; ++j) {
        Rational b = b_coeff(j, n);
        if ((n + j) % 2) b = -b;
        if (b != y[n - j]) in.exact_mismatch("j=" + std::to_string(j) + ",n=" + std::to_string(n));
      }
    }
  });
  const auto corpus = expression_corpus();
  std::mt19937_64 rng(77);
  std::uniform_real_distribution<double> ux0(-1, 1), ur(0.2, 3);
  std::vector<std::pair<double, double>> pts;
  for (int i = 0; i < 10; ++i) pts.emplace_back(ux0(rng), ur(rng));
  const double th = tol(o, 1e-9);
  for (int upper = 0; upper <= 1; ++upper) {
    for (int n = 1; n <= 6; ++n) {
      const std::string id = upper ? "Dr-upper-closed-vs-compose" : "Dr-closed-vs-compose";
      ok &= run_instance(
          Instance(id, {{"n", std::to_string(n)}, {"corpus", std::to_string(corpus.size())}},
                   "10 random points x0 in [-1,1], r in [0.2,3]", th),
          sink, [&](Instance& in) {
            for (std::size_t e = 0; e < corpus.size(); ++e) {
              const Expression a = upper ? radial::D_r_upper_closed(n, corpus[e]) : radial::D_r_closed(n, corpus[e]);
              const Expression b = upper ? radial::D_r_upper_compose(n, corpus[e]) : radial::D_r_compose(n, corpus[e]);
              const expr::Program pa(a), pb(b);
              for (auto [x0, r] : pts) {
                const auto va = pa(static_cast<LD>(x0), static_cast<LD>(r));
                const auto vb = pb(static_cast<LD>(x0), static_cast<LD>(r));
                in.observe(std::abs(va - vb) / std::max(LD(1), std::abs(vb)),
                           "expr#" + std::to_string(e) + "," + fmt_point(x0, r));
              }
            }
          });
    }
  }
  return ok;
}

// ---------------------------------------------------------------- leibniz

bool suite_leibniz(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  const Grid g = make_grid(-1, 1, 11, 0.2, 2, 10);
  const Expression f = expr::parse("exp(x0^2 - r^2)");
  const double th = tol(o, 1e-9);
  ok &= run_instance(Instance("Dr-gaussian", {{"n_max", "5"}}, g.spec, th), sink, [&](Instance& in) {
    for (int n = 0; n <= 5; ++n) {
      const expr::Program got(radial::D_r_compose(n, f));
      const expr::Program want(std::pow(-2.0L, static_cast<LD>(n)) * f);
      for (double x0 : g.x0) {
        for (double r : g.r) {
          const auto a = got(static_cast<LD>(x0), static_cast<LD>(r));
          const auto b = want(static_cast<LD>(x0), static_cast<LD>(r));
          in.observe(std::abs(a - b) / std::max(LD(1), std::abs(b)), "n=" + std::to_string(n) + "," + fmt_point(x0, r));
        }
      }
    }
  });
  for (const char* gs : {"cos(2*x0*r)", "sin(2*x0*r)"}) {
    const Expression gx = expr::parse(gs);
    for (int upper = 0; upper <= 1; ++upper) {
      for (int n = 0; n <= 4; ++n) {
        const std::string id = upper ? "leibniz-Dr-upper" : "leibniz-Dr";
        ok &= run_instance(Instance(id, {{"n", std::to_string(n)}, {"f", "exp(x0^2 - r^2)"}, {"g", gs}}, g.spec, th),
                           sink, [&](Instance& in) {
                             const expr::Program a(upper ? radial::leibniz_D_r_upper(n, f, gx)
                                                         : radial::leibniz_D_r(n, f, gx));
                             const expr::Program b(upper ? radial::D_r_upper_compose(n, f * gx)
                                                         : radial::D_r_compose(n, f * gx));
                             for (double x0 : g.x0) {
                               for (double r : g.r) {
                                 const auto va = a(static_cast<LD>(x0), static_cast<LD>(r));
                                 const auto vb = b(static_cast<LD>(x0), static_cast<LD>(r));
                                 in.observe(std::abs(va - vb) / std::max(LD(1), std::abs(vb)), fmt_point(x0, r));
                               }
                             }
                           });
      }
    }
  }
  return ok;
}

// ---------------------------------------------------------------- lemma1

bool suite_lemma1(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  const auto rs = linspace(0.5, 2, 16);
  const double th = tol(o, 1e-8);
  for (int m : odd_ms(o, {3, 5})) {
    for (int k : ks(o, 2)) {
      const CliffordPolynomial pk = default_pk(m, k);
      for (auto v : {MonomialVariant::ZPow, MonomialVariant::IZPow, MonomialVariant::ZNegPow,
                     MonomialVariant::IZNegPow}) {
        Params p = mk(m, k);
        p.emplace_back("variant", variant_name(v));
        p.emplace_back("n_max", "12");
        ok &= run_instance(Instance("lemma1", p, "x0=0,r=0.5:2:16", th), sink, [&](Instance& in) {
          const bool neg = v == MonomialVariant::ZNegPow || v == MonomialVariant::IZNegPow;
          for (int n = neg ? 1 : 0; n <= 12; ++n) {
            const FtMonomial fm = ft_monomial(n, v, m, k);
            const FtResult ft = ft_transform(fm.h(), m, k, pk);
            const LD c = to_long_double(fm.constant);
            for (double r : rs) {
              const auto got = ft.radial<LD>(0, r);
              const auto s = fm.seed(r);
              in.observe(pair_error(got, {c * s.a, c * s.b}), "n=" + std::to_string(n) + "," + fmt_point(0, r));
            }
          }
        });
      }
    }
  }
  return ok;
}

// ---------------------------------------------------------------- thm1

void compare_radial(Instance& in, const Grid& g, const FtResult& got, LD got_scale, const FtResult& want) {
  for (double x0 : g.x0) {
    for (double r : g.r) {
      auto a = got.radial<LD>(x0, r);
      a.a /= got_scale;
      a.b /= got_scale;
      in.observe(pair_error(a, want.radial<LD>(x0, r)), fmt_point(x0, r));
    }
  }
}

bool suite_thm1(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  const Grid g = make_grid(-1, 1, 11, 0.2, 2, 10);
  const int N = trunc(o, 30);
  const double th = tol(o, 1e-9);
  for (int m : odd_ms(o, {3, 5})) {
    for (int k : ks(o, 2)) {
      const CliffordPolynomial pk = default_pk(m, k);
      const FtResult closed = hermite_gf_closed(m, k, pk);
      ok &= run_instance(Instance("thm1-ft-vs-closed", mk(m, k), g.spec, th), sink, [&](Instance& in) {
        const FtResult ft = ft_transform(exp_z_squared(), m, k, pk);
        const int n = fueter_order(m, k);
        compare_radial(in, g, ft, std::pow(-2.0L, static_cast<LD>(n)) * double_factorial<LD>(2 * k + m - 1), closed);
      });
      Params p = mk(m, k);
      p.emplace_back("N", std::to_string(N));
      ok &= run_instance(Instance("thm1-closed-vs-series", p, g.spec + " (+ multivector check along 2 directions)", th),
                         sink, [&](Instance& in) {
                           const HermiteSeries s = ck_hermite_series(m, k, pk, N);
                           for (double x0 : g.x0) {
                             for (double r : g.r) in.observe(pair_error(s.radial(x0, r), closed.radial<LD>(x0, r)), fmt_point(x0, r));
                           }
                           for (const auto& pt : radial_grid_points(m, g.x0, g.r)) {
                             const auto want = closed.evaluate<LD>(pt.x0, pt.x);
                             const auto got = s.evaluate(pt.x0, pt.x);
                             in.observe((got - want).norm() / std::max(LD(1), want.norm()),
                                        "multivector x0=" + fmt(static_cast<double>(pt.x0)));
                           }
                         });
    }
  }
  if (!o.m || (*o.m == 3 && (!o.k || *o.k == 0))) {
    ok &= run_instance(Instance("thm1-reference-m3", mk(3, 0), g.spec, tol(o, 1e-12)), sink, [&](Instance& in) {
      compare_radial(in, g, hermite_reference_m3(), 1, hermite_gf_closed(3, 0, default_pk(3, 0)));
    });
  }
  return ok;
}

// ---------------------------------------------------------------- thm2 / thm3

bool suite_thm2(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  const Grid g = make_grid(-0.3, 0.3, 7, 0.2, 0.8, 7);
  const int N = trunc(o, 25);
  const double th = tol(o, 1e-8);
  for (int m : odd_ms(o, {3})) {
    for (int k : ks(o, 1)) {
      const CliffordPolynomial pk = default_pk(m, k);
      for (double alpha : alphas(o, {0.5, 2, -0.3})) {
        Params p = mk(m, k);
        p.emplace_back("alpha", fmt(alpha));
        p.emplace_back("N", std::to_string(N));
        ok &= run_instance(Instance("thm2-ft-vs-series", p, g.spec, th), sink, [&](Instance& in) {
          const LD c = gegenbauer_reduction_constant(static_cast<LD>(alpha), m, k);
          const FtResult ft = ft_transform(one_plus_z_squared_pow(alpha + fueter_order(m, k)), m, k, pk);
          const GegenbauerSeries s = ck_gegenbauer_series(m, k, alpha, pk, N);
          for (double x0 : g.x0) {
            for (double r : g.r) {
              auto a = ft.radial<LD>(x0, r);
              a.a /= c;
              a.b /= c;
              in.observe(pair_error(s.radial(x0, r), a), fmt_point(x0, r));
            }
          }
        });
      }
    }
  }
  return ok;
}

bool suite_thm3(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  const Grid g = make_grid(-0.3, 0.3, 7, 0.2, 0.8, 7);
  const int N = trunc(o, 25);
  for (int m : odd_ms(o, {3})) {
    for (int k : ks(o, 1)) {
      const CliffordPolynomial pk = default_pk(m, k);
      for (double alpha : alphas(o, {0.5, 1.5, 2, -0.3})) {
        Params p = mk(m, k);
        p.emplace_back("alpha", fmt(alpha));
        const FtResult closed = gegenbauer_gf_closed(m, k, alpha, pk);
        Params ps = p;
        ps.emplace_back("N", std::to_string(N));
        ok &= run_instance(Instance("thm3-closed-vs-series", ps, g.spec, tol(o, 1e-8)), sink, [&](Instance& in) {
          const GegenbauerSeries s = ck_gegenbauer_series(m, k, alpha, pk, N);
          for (double x0 : g.x0) {
            for (double r : g.r) in.observe(pair_error(s.radial(x0, r), closed.radial<LD>(x0, r)), fmt_point(x0, r));
          }
        });
        if (m == 3 && k == 0) {
          ok &= run_instance(Instance("thm3-reference-m3", p, g.spec, tol(o, 1e-10)), sink, [&](Instance& in) {
            compare_radial(in, g, gegenbauer_reference_m3(alpha), 1, closed);
          });
        }
      }
    }
  }
  return ok;
}

// ---------------------------------------------------------------- corollaries

struct CorollaryPoint {
  double x0, r;
};

std::vector<CorollaryPoint> corollary_points(const Grid& g, std::vector<CorollaryPoint> extra) {
  std::vector<CorollaryPoint> out;
  for (double x0 : g.x0) {
    for (double r : g.r) out.push_back({x0, r});
  }
  out.insert(out.end(), extra.begin(), extra.end());
  return out;
}

}  // namespace

RadialPair<LD> corollary3_lhs(int m, int k, LD x0, LD r) {
  const int N = fueter_order(m, k);
  const Expression arg = expr::product({expr::constant(2), expr::x0(), expr::r()});
  const Expression c = expr::cos(arg), s = expr::sin(arg);
  RadialPair<LD> out;
  for (int n = 0; n <= N; ++n) {
    const LD w = to_long_double(Rational(binomial(N, n))) * std::pow(-2.0L, static_cast<LD>(-n));
    out.a += w * expr::evaluate<LD>(radial::D_r_closed(n, c), x0, r).real();
    out.b += w * expr::evaluate<LD>(radial::D_r_upper_closed(n, s), x0, r).real();
  }
  return out;
}

RadialPair<LD> corollary3_rhs(int m, int k, LD x0, LD r, int terms) {
  RadialPair<LD> out;
  const LD t = r * r;
  for (int n = 0; n < terms; ++n) {
    const LD f = factorial<LD>(n);
    out.a += std::ldexp(f, 2 * n) * std::pow(x0, 2 * n) / factorial<LD>(2 * n) * laguerre(n, k + m / 2.0L - 1, t);
    out.b += std::ldexp(f, 2 * n + 1) * std::pow(x0, 2 * n + 1) / factorial<LD>(2 * n + 1) * r *
             laguerre(n, k + m / 2.0L, t);
  }
  const LD e = std::exp(-x0 * x0);
  return {out.a * e, out.b * e};
}

RadialPair<LD> corollary4_lhs(int m, int k, LD alpha, LD x0, LD r) {
  auto [a, b] = gegenbauer_gf_sums(m, k, alpha);
  return {expr::evaluate<LD>(a, x0, r).real(), expr::evaluate<LD>(b, x0, r).real()};
}

RadialPair<LD> corollary4_rhs(int m, int k, LD alpha, LD x0, LD r, int terms) {
  const LD M = gegenbauer_M(alpha, m, k);
  const LD t = r * r;
  if (t >= 1) throw DomainError("corollary needs r in (0, 1)");
  RadialPair<LD> out;
  for (int n = 0; n < terms; ++n) {
    const LD f = factorial<LD>(n);
    out.a += std::ldexp(f, 2 * n) * pochhammer<LD>(alpha - n + 1, n) * std::pow(x0, 2 * n) / factorial<LD>(2 * n) *
             std::pow(1 - t, alpha - 2 * n) * jacobi(n, k + m / 2.0L - 1, alpha - 2 * n, 1 - 2 * t);
    out.b += std::ldexp(f, 2 * n + 1) * pochhammer<LD>(alpha - n, n + 1) * std::pow(x0, 2 * n + 1) /
             factorial<LD>(2 * n + 1) * std::pow(1 - t, alpha - 2 * n - 1) * r *
             jacobi(n, k + m / 2.0L, alpha - 2 * n - 1, 1 - 2 * t);
  }
  return {M * out.a, M * out.b};
}

namespace {

bool suite_corollary3(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  const Grid g = make_grid(-1, 1, 11, 0.2, 2, 10);
  const int terms = trunc(o, 30);
  const auto pts = corollary_points(g, {{0.4, 0.9}, {0, 0.7}});
  for (int m : odd_ms(o, {3, 5})) {
    for (int k : ks(o, 2)) {
      for (int part = 0; part < 2; ++part) {
        Params p = mk(m, k);
        p.emplace_back("identity", part ? "ii" : "i");
        p.emplace_back("terms", std::to_string(terms));
        ok &= run_instance(Instance("corollary3", p, g.spec + " + (0.4,0.9),(0,0.7)", tol(o, 1e-9)), sink,
                           [&](Instance& in) {
                             for (auto [x0, r] : pts) {
                               const auto l = corollary3_lhs(m, k, x0, r);
                               const auto rr = corollary3_rhs(m, k, x0, r, terms);
                               in.observe(part ? mixed_error(l.b, rr.b) : mixed_error(l.a, rr.a), fmt_point(x0, r));
                             }
                           });
      }
    }
  }
  return ok;
}

bool suite_corollary4(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  // |x0| <= (1 - r)/2 on this grid, inside the disc where the x0-series converges
  const Grid g = make_grid(-0.2, 0.2, 5, 0.2, 0.6, 5);
  const int terms = trunc(o, 25);
  const auto pts = corollary_points(g, {{0.2, 0.5}});
  for (int m : odd_ms(o, {3})) {
    for (int k : ks(o, 1)) {
      for (double alpha : alphas(o, {0.5, 1.5, 2, -0.3})) {
        for (int part = 0; part < 2; ++part) {
          Params p = mk(m, k);
          p.emplace_back("alpha", fmt(alpha));
          p.emplace_back("identity", part ? "ii" : "i");
          p.emplace_back("terms", std::to_string(terms));
          ok &= run_instance(Instance("corollary4", p, g.spec + " + (0.2,0.5)", tol(o, 1e-8)), sink, [&](Instance& in) {
            const LD M = gegenbauer_M(alpha, m, k);
            for (auto [x0, r] : pts) {
              const auto l = corollary4_lhs(m, k, alpha, x0, r);
              const auto rr = corollary4_rhs(m, k, alpha, x0, r, terms);
              // compare on the CK scale (both sides divided by M)
              in.observe(part ? mixed_error(l.b / M, rr.b / M) : mixed_error(l.a / M, rr.a / M), fmt_point(x0, r));
            }
          });
        }
      }
    }
  }
  return ok;
}

// ---------------------------------------------------------------- classical-gf

LD laguerre_gf_sum(LD t, LD x, LD alpha, int N) {
  LD s = 0, p = 1;
  for (int n = 0; n <= N; ++n) {
    s += p * laguerre(n, alpha, x);
    p *= t;
  }
  return s;
}

LD laguerre_gf_closed(LD t, LD x, LD alpha) { return std::pow(1 - t, -alpha - 1) * std::exp(-x * t / (1 - t)); }

LD jacobi_gf_sum(LD t, LD x, LD a, LD b, int N) {
  LD s = 0, p = 1;
  for (int n = 0; n <= N; ++n) {
    s += p * jacobi(n, a, b, x);
    p *= t;
  }
  return s;
}

LD jacobi_gf_closed(LD t, LD x, LD a, LD b) {
  const LD R = std::sqrt(1 - 2 * x * t + t * t);
  return std::pow(2.0L, a + b) / R * std::pow(1 - t + R, -a) * std::pow(1 + t + R, -b);
}

bool suite_classical_gf(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  ok &= run_instance(Instance("laguerre-gf-example", {{"t", "0.3"}, {"x", "1.7"}, {"alpha", "0.5"}, {"N", "40"}},
                              "single point", tol(o, 1e-12)),
                     sink, [](Instance& in) {
                       in.observe(mixed_error(laguerre_gf_sum(0.3L, 1.7L, 0.5L, 40), laguerre_gf_closed(0.3L, 1.7L, 0.5L)),
                                  "t=0.3");
                     });
  ok &= run_instance(
      Instance("jacobi-gf-example", {{"t", "0.2"}, {"x", "0.4"}, {"alpha", "1"}, {"beta", "0.5"}, {"N", "40"}},
               "single point", tol(o, 1e-12)),
      sink, [](Instance& in) {
        in.observe(mixed_error(jacobi_gf_sum(0.2L, 0.4L, 1, 0.5L, 40), jacobi_gf_closed(0.2L, 0.4L, 1, 0.5L)), "t=0.2");
      });
  const int N = trunc(o, 120);
  std::mt19937_64 rng(4242);
  std::uniform_real_distribution<double> ut(-0.5, 0.5), ux(0, 4), ua(-0.5, 3), uy(-1, 1);
  ok &= run_instance(Instance("laguerre-gf-random", {{"tuples", "20"}, {"N", std::to_string(N)}},
                              "|t|<=0.5, x in [0,4], alpha in [-0.5,3]", tol(o, 1e-10)),
                     sink, [&](Instance& in) {
                       for (int i = 0; i < 20; ++i) {
                         const LD t = ut(rng), x = ux(rng), a = ua(rng);
                         in.observe(mixed_error(laguerre_gf_sum(t, x, a, N), laguerre_gf_closed(t, x, a)),
                                    "t=" + fmt(t) + ",x=" + fmt(x) + ",alpha=" + fmt(a));
                       }
                     });
  ok &= run_instance(Instance("jacobi-gf-random", {{"tuples", "20"}, {"N", std::to_string(N)}},
                              "|t|<=0.5, x in [-1,1], alpha,beta in [-0.5,3]", tol(o, 1e-10)),
                     sink, [&](Instance& in) {
                       for (int i = 0; i < 20; ++i) {
                         const LD t = ut(rng), x = uy(rng), a = ua(rng), b = ua(rng);
                         in.observe(mixed_error(jacobi_gf_sum(t, x, a, b, N), jacobi_gf_closed(t, x, a, b)),
                                    "t=" + fmt(t) + ",x=" + fmt(x) + ",alpha=" + fmt(a) + ",beta=" + fmt(b));
                       }
                     });
  return ok;
}

// ---------------------------------------------------------------- monogenicity

CliffordPolynomial random_polynomial(int m, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coef(-5, 5), blade(0, (1 << m) - 1);
  CliffordPolynomial p(m);
  for (int d = 0; d <= deg; ++d) {
    for (const auto& mono : monomials_of_degree(m, d)) {
      for (int rep = 0; rep < 2; ++rep) {
        const int c = coef(rng);
        if (c != 0) p.add_term(mono, static_cast<std::uint32_t>(blade(rng)), rational(c, 1 + rep));
      }
    }
  }
  return p;
}

bool suite_ckgeneric(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  std::vector<int> ms = o.m ? std::vector<int>{*o.m} : std::vector<int>{2, 3, 4};
  for (int m : ms) {
    check_dimension(m);
    ok &= run_instance(Instance("ckgeneric-exact", {{"m", std::to_string(m)}}, "symbolic", 0, true), sink,
                       [&](Instance& in) {
                         std::mt19937_64 rng(1000 + m);
                         std::vector<std::pair<std::string, CliffordPolynomial>> seeds{
                             {"1", CliffordPolynomial::scalar(m, Rational(1))},
                             {"x", vector_variable(m)},
                             {"|x|^2", norm_squared(m)},
                             {"x*|x|^2", vector_variable(m) * norm_squared(m)}};
                         for (int i = 0; i < 4; ++i) seeds.emplace_back("random#" + std::to_string(i), random_polynomial(m, 3, rng));
                         if (m >= 2) seeds.emplace_back("P_2", default_pk(m, 2));
                         for (const auto& [name, g] : seeds) {
                           const GenericCK ck = ck_generic(g);
                           if (!ck.is_monogenic()) in.exact_mismatch(name + ": Cauchy-Riemann residual");
                           if (!(ck.restriction() == g)) in.exact_mismatch(name + ": restriction");
                         }
                       });
  }
  return ok;
}

bool suite_monogenicity(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  const double th = tol(o, 1e-6);
  {
    const auto x0s = linspace(-1, 1, 5);
    const auto rs = linspace(0.2, 2, 5);
    for (int m : odd_ms(o, {3, 5})) {
      for (int k : ks(o, 2)) {
        ok &= run_instance(Instance("monogenic-hermite-closed", mk(m, k), "x0=-1:1:5,r=0.2:2:5 x 2 directions, h=1e-4", th),
                           sink, [&](Instance& in) {
                             const FtResult f = hermite_gf_closed(m, k, default_pk(m, k));
                             const auto pts = radial_grid_points(m, x0s, rs);
                             in.observe(monogenicity_residual(f, pts), "grid");
                           });
      }
    }
  }
  {
    const auto x0s = linspace(-0.3, 0.3, 4);
    const auto rs = linspace(0.2, 0.8, 4);
    for (int m : odd_ms(o, {3})) {
      for (int k : ks(o, 1)) {
        for (double alpha : alphas(o, {0.5, 1.5, 2, -0.3})) {
          Params p = mk(m, k);
          p.emplace_back("alpha", fmt(alpha));
          ok &= run_instance(Instance("monogenic-gegenbauer-closed", p, "x0=-0.3:0.3:4,r=0.2:0.8:4 x 2 directions, h=1e-4", th),
                             sink, [&](Instance& in) {
                               const FtResult f = gegenbauer_gf_closed(m, k, alpha, default_pk(m, k));
                               in.observe(monogenicity_residual(f, radial_grid_points(m, x0s, rs)), "grid");
                             });
        }
      }
    }
  }
  ok &= run_instance(Instance("monogenic-control", {{"input", "A=x0,B=0,P_0=1"}, {"expect", "residual 1"}},
                              "x0=0:1:3,r=0.5:1.5:3", th),
                     sink, [&](Instance& in) {
                       const FtResult f(3, 0, expr::x0(), Part::Real, expr::constant(0), Part::Real,
                                        CliffordPolynomial::scalar(3, Rational(1)));
                       const auto pts = radial_grid_points(3, linspace(0, 1, 3), linspace(0.5, 1.5, 3));
                       // the detector must report exactly the violation d/dx0 x0 = 1
                       in.observe(std::abs(monogenicity_residual(f, pts) - 1), "grid");
                     });
  ok &= suite_ckgeneric(o, sink);
  return ok;
}

// ---------------------------------------------------------------- operators

bool suite_operators(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  std::vector<int> ms = o.m ? std::vector<int>{*o.m} : std::vector<int>{3, 5, 7};
  std::vector<Rational> as;
  if (o.alpha) {
    as.push_back(Rational(*o.alpha));
  } else {
    as = {rational(-1, 2), rational(1, 2), Rational(1), Rational(3)};
  }
  for (int m : ms) {
    for (int k : ks(o, 3)) {
      const MonogenicBasis basis = monogenic_basis(m, k);
      Params p = mk(m, k);
      p.emplace_back("basis_size", std::to_string(basis.elements.size()));
      p.emplace_back("n_max", "8");
      ok &= run_instance(Instance("hermite-operator-vs-explicit", p, "exact", 0, true), sink, [&](Instance& in) {
        std::vector<CliffordPolynomial> h;
        for (int n = 0; n <= 8; ++n) h.push_back(explicit_hermite(n, m, k));
        for (std::size_t i = 0; i < basis.elements.size(); ++i) {
          CliffordPolynomial cur = hermite_operator(0, basis.elements[i]);
          for (int n = 0; n <= 8; ++n) {
            if (n > 0) cur = apply_D_plus(cur);
            if (!(cur == h[n] * basis.elements[i])) {
              in.exact_mismatch("P#" + std::to_string(i) + ",n=" + std::to_string(n));
            }
          }
        }
      });
      for (const Rational& alpha : as) {
        Params q = mk(m, k);
        q.emplace_back("alpha", to_string(alpha));
        q.emplace_back("basis_size", std::to_string(basis.elements.size()));
        q.emplace_back("n_max", "6");
        ok &= run_instance(Instance("gegenbauer-operator-vs-explicit", q, "exact", 0, true), sink, [&](Instance& in) {
          std::vector<CliffordPolynomial> c;
          for (int n = 0; n <= 6; ++n) c.push_back(explicit_gegenbauer(n, m, k, alpha));
          for (std::size_t i = 0; i < basis.elements.size(); ++i) {
            for (int n = 0; n <= 6; ++n) {
              const CliffordPolynomial got = gegenbauer_operator(n, alpha, basis.elements[i]);
              if (!(got == c[n] * basis.elements[i])) {
                in.exact_mismatch("P#" + std::to_string(i) + ",n=" + std::to_string(n));
              }
            }
          }
        });
      }
    }
  }
  return ok;
}

// ---------------------------------------------------------------- qpoly

std::vector<std::complex<LD>> sample_z() {
  std::mt19937_64 rng(99);
  std::uniform_real_distribution<double> ux(-1, 1), uy(0.05, 0.9);
  std::vector<std::complex<LD>> out;
  for (int i = 0; i < 10; ++i) out.emplace_back(ux(rng), uy(rng));
  return out;
}

// 2F1(-n, n + 2 lambda; lambda + 1/2; (1 - x)/2), proportional to C_n^{(lambda)}(x).
std::complex<LD> gegenbauer_hyp(int n, LD lambda, std::complex<LD> x) {
  std::complex<LD> s(0, 0), term(1, 0);
  const std::complex<LD> y = (LD(1) - x) / LD(2);
  for (int j = 0; j <= n; ++j) {
    s += term;
    term *= (LD(j - n) * (n + 2 * lambda + j)) / ((lambda + LD(0.5) + j) * LD(j + 1)) * y;
  }
  return s;
}

bool gegenbauer_vanishes(int n, LD lambda) {
  // C_n^{(lambda)} = 0 identically iff (lambda)_{n-s} vanishes for every 0 <= s <= n/2
  if (n == 0) return false;
  for (int s = 0; 2 * s <= n; ++s) {
    if (pochhammer<LD>(lambda, n - s) != 0) return false;
  }
  return true;
}

bool suite_qpoly(const SuiteOptions& o, const ReportSink& sink) {
  bool ok = true;
  const auto zs = sample_z();
  const double th = tol(o, 1e-10);
  for (double beta : o.alpha ? std::vector<double>{*o.alpha} : std::vector<double>{2, 2.5, -0.7}) {
    ok &= run_instance(Instance("dz-power-identity", {{"beta", fmt(beta)}, {"n_max", "5"}}, "10 sample z, 0<Im z<0.9", th),
                       sink, [&](Instance& in) {
                         const Expression h = one_plus_z_squared_pow(beta);
                         Expression d = h;
                         for (int n = 0; n <= 5; ++n) {
                           if (n > 0) d = expr::diff(d, expr::Var::X0);  // holomorphic: d/dz = d/dx0
                           const auto q = q_poly_numeric(n, beta);
                           const expr::Program pd(d);
                           for (auto z : zs) {
                             const auto got = pd(z.real(), z.imag());
                             const auto base = LD(1) + z * z;
                             const auto want = std::pow(base, std::complex<LD>(beta - n, 0)) * q(z);
                             in.observe(std::abs(got - want) / std::max(LD(1), std::abs(want)),
                                        "n=" + std::to_string(n) + ",z=" + fmt(z.real()) + "+" + fmt(z.imag()) + "i");
                           }
                         }
                       });
  }
  for (const char* hs : {"z^5", "(1 + z^2)^3"}) {
    ok &= run_instance(Instance("dy-split", {{"h", hs}, {"n_max", "3"}}, "10 sample points", th), sink, [&](Instance& in) {
      const Expression h = expr::parse(hs);
      for (int n = 0; n <= 3; ++n) {
        const expr::Program dy(expr::diff(h, expr::Var::R, n));
        const expr::Program dz(expr::diff(h, expr::Var::X0, n));
        const std::complex<LD> in_(std::pow(std::complex<LD>(0, 1), n));
        const std::complex<LD> in1(std::pow(std::complex<LD>(0, 1), n + 1));
        const LD sn = n % 2 ? -1 : 1;
        for (auto z : zs) {
          const auto y = dy(z.real(), z.imag());
          const auto d = dz(z.real(), z.imag());
          const auto u = in_ / LD(2) * (d + sn * std::conj(d));
          const auto v = -in1 / LD(2) * (d - sn * std::conj(d));
          in.observe(std::max(mixed_error(y.real(), u.real()), mixed_error(y.imag(), v.real())),
                     "n=" + std::to_string(n));
          in.observe(std::max(std::abs(u.imag()), std::abs(v.imag())), "imaginary residue n=" + std::to_string(n));
        }
      }
    });
  }
  for (double beta : o.alpha ? std::vector<double>{*o.alpha} : std::vector<double>{2, 2.5, -0.7, 3.3}) {
    for (int n = 1; n <= 5; ++n) {
      const LD lambda = beta - n + 0.5L;
      const bool degenerate = gegenbauer_vanishes(n, lambda);
      Params p{{"beta", fmt(beta)}, {"n", std::to_string(n)}, {"lambda", fmt(lambda)}};
      p.emplace_back("normalization", degenerate ? "2F1 (C_n vanishes identically)" : "C_n");
      ok &= run_instance(Instance("q-gegenbauer-ratio", p, "10 sample z", th), sink, [&](Instance& in) {
        const auto q = q_poly_numeric(n, beta);
        std::vector<std::complex<LD>> ratios;
        for (auto z : zs) {
          const std::complex<LD> iz(-z.imag(), z.real());
          const std::complex<LD> c = degenerate ? gegenbauer_hyp(n, lambda, iz) : gegenbauer_1d(n, lambda, iz);
          ratios.push_back(q(z) / (std::pow(std::complex<LD>(0, 1), n) * c));
        }
        const LD scale = std::max(std::abs(ratios[0]), LD(1e-300));
        for (std::size_t i = 0; i < ratios.size(); ++i) {
          const LD spread = q.is_zero() ? std::abs(ratios[i]) : std::abs(ratios[i] - ratios[0]) / scale;
          in.observe(spread, "sample#" + std::to_string(i));
        }
      });
    }
  }
  return ok;
}

using SuiteFn = bool (*)(const SuiteOptions&, const ReportSink&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"lemma1", &suite_lemma1},         {"thm1", &suite_thm1},
      {"thm2", &suite_thm2},             {"thm3", &suite_thm3},
      {"coeffs", &suite_coeffs},         {"leibniz", &suite_leibniz},
      {"corollary3", &suite_corollary3}, {"corollary4", &suite_corollary4},
      {"classical-gf", &suite_classical_gf}, {"monogenicity", &suite_monogenicity},
      {"operators", &suite_operators},   {"qpoly", &suite_qpoly},
      {"ckgeneric", &suite_ckgeneric},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, f] : registry()) out.push_back(n);
    out.push_back("all");
    return out;
  }();
  return names;
}

bool is_suite(const std::string& name) {
  const auto& n = suite_names();
  return std::find(n.begin(), n.end(), name) != n.end();
}

bool run_suite(const std::string& name, const SuiteOptions& opts, const ReportSink& sink) {
  if (name == "all") {
    bool ok = true;
    for (const auto& [n, f] : registry()) {
      if (n == "ckgeneric") continue;  // already part of monogenicity
      ok &= f(opts, sink);
    }
    return ok;
  }
  for (const auto& [n, f] : registry()) {
    if (n == name) return f(opts, sink);
  }
  throw PreconditionError("unknown suite '" + name + "'");
}

std::vector<VerificationReport> run_suite(const std::string& name, const SuiteOptions& opts) {
  std::vector<VerificationReport> out;
  run_suite(name, opts, [&](const VerificationReport& r) { out.push_back(r); });
  return out;
}

}  // namespace cliffgen
