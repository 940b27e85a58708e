#include "cliffgen/fueter.hpp"

#include <cmath>
#include <iomanip>
#include <limits>
#include <sstream>

#include "cliffgen/classical.hpp"
#include "cliffgen/parser.hpp"
#include "cliffgen/radial.hpp"

namespace cliffgen {

using expr::Expression;

FtResult::FtResult(int m, int k, Expression a, Part a_part, Expression b, Part b_part, CliffordPolynomial pk)
    : m_(m),
      k_(k),
      a_(std::move(a)),
      b_(std::move(b)),
      a_part_(a_part),
      b_part_(b_part),
      pk_(std::move(pk)),
      pa_(std::make_shared<const expr::Program>(a_)),
      pb_(std::make_shared<const expr::Program>(b_)) {}

namespace {

template <class T>
T pick(const std::complex<T>& v, Part p) {
  return p == Part::Real ? v.real() : v.imag();
}

}  // namespace

template <class T>
RadialPair<T> FtResult::radial(T x0, T r) const {
  return {pick((*pa_)(x0, r), a_part_), pick((*pb_)(x0, r), b_part_)};
}

template <class T>
Multivector<T> FtResult::evaluate(T x0, std::span<const T> x) const {
  if (static_cast<int>(x.size()) != m_) throw PreconditionError("evaluation point dimension mismatch");
  T r2(0);
  for (const T& v : x) r2 += v * v;
  if (r2 == T(0)) throw PoleError("pole: r = 0");
  const T r = std::sqrt(r2);
  const RadialPair<T> ab = radial(x0, r);
  std::vector<T> w(x.begin(), x.end());
  for (T& v : w) v /= r;
  Multivector<T> f = Multivector<T>::scalar(m_, ab.a) + vector_multivector<T>(m_, w) * ab.b;
  return f * pk_.evaluate<T>(x);
}

template RadialPair<double> FtResult::radial<double>(double, double) const;
template RadialPair<long double> FtResult::radial<long double>(long double, long double) const;
template Multivector<double> FtResult::evaluate<double>(double, std::span<const double>) const;
template Multivector<long double> FtResult::evaluate<long double>(long double, std::span<const long double>) const;

FtResult FtResult::scaled(long double s) const {
  return FtResult(m_, k_, s * a_, a_part_, s * b_, b_part_, pk_);
}

void require_odd(int m) {
  if (m < 1 || m % 2 == 0) throw PreconditionError("m must be odd");
}

int fueter_order(int m, int k) {
  require_odd(m);
  if (k < 0) throw PreconditionError("k must be >= 0");
  return k + (m - 1) / 2;
}

namespace {

void check_pk(const CliffordPolynomial& pk, int m, int k, const char* where) {
  check_dimension(m);
  if (pk.dim() != m) throw PreconditionError(std::string(where) + ": P_k dimension does not match m");
  if (pk.is_zero()) throw PreconditionError(std::string(where) + ": P_k is zero");
  require_monogenic(pk, where);
  const auto deg = euler_degree(pk);
  if (!deg || *deg != k) throw PreconditionError(std::string(where) + ": P_k is not homogeneous of degree k");
}

}  // namespace

FtResult ft_transform(const Expression& h, int m, int k, const CliffordPolynomial& pk) {
  const int N = fueter_order(m, k);
  check_pk(pk, m, k, "ft_transform");
  const long double df = double_factorial<long double>(2 * k + m - 1);
  return FtResult(m, k, df * radial::D_r_closed(N, h), Part::Real, df * radial::D_r_upper_closed(N, h), Part::Imag,
                  pk);
}

const char* variant_name(MonomialVariant v) {
  switch (v) {
    case MonomialVariant::ZPow:
      return "z^n";
    case MonomialVariant::IZPow:
      return "iz^n";
    case MonomialVariant::ZNegPow:
      return "z^-n";
    case MonomialVariant::IZNegPow:
      return "iz^-n";
  }
  return "?";
}

Rational lemma_constant(MonomialVariant v, int n, int m, int k) {
  const int N = fueter_order(m, k);
  if (n < 0) throw PreconditionError("monomial degree must be >= 0");
  const bool even = n % 2 == 0;
  switch (v) {
    case MonomialVariant::ZPow: {
      if (n < 2 * N) return Rational(0);
      const int f = n / 2;
      Rational c(factorial<Integer>(f), factorial<Integer>(f - N));
      c.canonicalize();
      Integer p2 = Integer(1) << N;
      if (N % 2) p2 = -p2;
      return Rational(c * p2 * double_factorial<Integer>(2 * N));
    }
    case MonomialVariant::IZPow: {
      Integer p(1);
      if (even) {
        for (int j = 1; j <= N; ++j) p *= n - (2 * j - 1);
      } else {
        for (int j = 0; j <= N - 1; ++j) p *= n - 2 * j;
      }
      return Rational(p);
    }
    case MonomialVariant::ZNegPow:
    case MonomialVariant::IZNegPow: {
      if (n < 1) throw PreconditionError("negative-power monomials need n >= 1");
      const bool short_form = (v == MonomialVariant::ZNegPow) == even;
      Rational c = short_form ? Rational(double_factorial<Integer>(n + 2 * N - 2), double_factorial<Integer>(n - 2))
                              : Rational(double_factorial<Integer>(n + 2 * N - 1), double_factorial<Integer>(n - 1));
      c.canonicalize();
      return c;
    }
  }
  return Rational(0);
}

FtMonomial ft_monomial(int n, MonomialVariant v, int m, int k) {
  const int N = fueter_order(m, k);
  const Rational df(double_factorial<Integer>(2 * N));
  FtMonomial out;
  out.variant = v;
  out.n = n;
  const Rational c = lemma_constant(v, n, m, k);
  switch (v) {
    case MonomialVariant::ZPow:
      out.constant = c;
      out.x_power = n - 2 * N;
      break;
    case MonomialVariant::IZPow:
      out.constant = (N % 2 ? Rational(-df) : df) * c;
      out.x_power = n - (2 * N - 1);
      out.over_r = true;
      break;
    case MonomialVariant::ZNegPow:
      out.constant = df * c;
      out.x_power = -(n + 2 * N);
      break;
    case MonomialVariant::IZNegPow:
      out.constant = df * c;
      out.x_power = -(n + 2 * N - 1);
      out.over_r = true;
      break;
  }
  return out;
}

Expression FtMonomial::h() const {
  const bool neg = variant == MonomialVariant::ZNegPow || variant == MonomialVariant::IZNegPow;
  const bool imag = variant == MonomialVariant::IZPow || variant == MonomialVariant::IZNegPow;
  Expression e = expr::pow(expr::z(), static_cast<long double>(neg ? -n : n));
  return imag ? expr::imag_unit() * e : e;
}

RadialPair<long double> FtMonomial::seed(long double r) const {
  // x^q = w^q r^q, w^2 = -1
  const int q = x_power;
  long double mag = std::pow(r, static_cast<long double>(q));
  if (over_r) mag /= r;
  switch (((q % 4) + 4) % 4) {
    case 0:
      return {mag, 0};
    case 1:
      return {0, mag};
    case 2:
      return {-mag, 0};
    default:
      return {0, -mag};
  }
}

Expression exp_z_squared() { return expr::exp(expr::pow(expr::z(), 2)); }

FtResult hermite_gf_closed(int m, int k, const CliffordPolynomial& pk) {
  const int N = fueter_order(m, k);
  check_pk(pk, m, k, "hermite_gf_closed");
  const Expression two_x0_r = expr::product({expr::constant(2), expr::x0(), expr::r()});
  const Expression c = expr::cos(two_x0_r);
  const Expression s = expr::sin(two_x0_r);
  std::vector<Expression> a_terms;
  std::vector<Expression> b_terms;
  for (int j = 0; j <= N; ++j) {
    const long double w = to_long_double(Rational(binomial(N, j))) * std::pow(-2.0L, static_cast<long double>(-j));
    a_terms.push_back(w * radial::D_r_compose(j, c));
    b_terms.push_back(w * radial::D_r_upper_compose(j, s));
  }
  const Expression e =
      expr::exp(expr::pow(expr::x0(), 2) - expr::pow(expr::r(), 2));
  return FtResult(m, k, e * expr::sum(std::move(a_terms)), Part::Real, e * expr::sum(std::move(b_terms)), Part::Real,
                  pk);
}

const char* const kHermiteReferenceA = "exp(x0^2 - r^2)*(cos(2*x0*r) + x0*r^-1*sin(2*x0*r))";
const char* const kHermiteReferenceB =
    "exp(x0^2 - r^2)*(sin(2*x0*r) + sin(2*x0*r)*0.5*r^-2 - x0*r^-1*cos(2*x0*r))";

FtResult hermite_reference_m3() {
  return FtResult(3, 0, expr::parse(kHermiteReferenceA), Part::Real, expr::parse(kHermiteReferenceB), Part::Real,
                  CliffordPolynomial::scalar(3, Rational(1)));
}

namespace {

std::string num(long double v) {
  std::ostringstream os;
  os << std::setprecision(std::numeric_limits<long double>::max_digits10) << v;
  return os.str();
}

}  // namespace

FtResult gegenbauer_reference_m3(long double alpha) {
  if (alpha_forbidden(alpha, 3, 0)) throw PreconditionError("alpha excluded: alpha must avoid {-1, ..., -k-(m-1)/2}");
  const std::string a = num(alpha);
  const std::string a1 = num(alpha + 1);
  const std::string c = num(1 / (2 * (alpha + 1)));
  const std::string zb = "(x0 - i*r)";
  const std::string A = "-0.5*i*r^-1*(z*(1 + z^2)^(" + a + ") - " + zb + "*(1 + " + zb + "^2)^(" + a + "))";
  const std::string B = "-0.5*r^-1*(z*(1 + z^2)^(" + a + ") + " + zb + "*(1 + " + zb + "^2)^(" + a + ") + i*" + c +
                        "*r^-1*((1 + z^2)^(" + a1 + ") - (1 + " + zb + "^2)^(" + a1 + ")))";
  return FtResult(3, 0, expr::parse(A), Part::Real, expr::parse(B), Part::Real,
                  CliffordPolynomial::scalar(3, Rational(1)));
}

QPoly q_poly(int n, const Rational& beta) {
  if (n < 0) throw PreconditionError("q_poly degree must be >= 0");
  const UniPoly<Rational> z = UniPoly<Rational>::identity();
  const UniPoly<Rational> one_plus_z2(std::vector<Rational>{Rational(1), Rational(0), Rational(1)});
  UniPoly<Rational> q = UniPoly<Rational>::constant(Rational(1));
  for (int j = 0; j < n; ++j) q = z * q * Rational(2 * (beta - j)) + one_plus_z2 * q.derivative();
  return {n, beta, q};
}

UniPoly<long double> q_poly_numeric(int n, long double beta) {
  if (n < 0) throw PreconditionError("q_poly degree must be >= 0");
  const UniPoly<long double> z = UniPoly<long double>::identity();
  const UniPoly<long double> one_plus_z2(std::vector<long double>{1, 0, 1});
  UniPoly<long double> q = UniPoly<long double>::constant(1);
  for (int j = 0; j < n; ++j) q = z * q * (2 * (beta - j)) + one_plus_z2 * q.derivative();
  return q;
}

bool alpha_forbidden(long double alpha, int m, int k) {
  const int N = fueter_order(m, k);
  return std::floor(alpha) == alpha && alpha <= -1 && alpha >= -N;
}

namespace {

void require_alpha(long double alpha, int m, int k) {
  if (alpha_forbidden(alpha, m, k)) {
    throw PreconditionError("alpha excluded: alpha must avoid {-1, ..., -k-(m-1)/2}");
  }
}

}  // namespace

Rational gegenbauer_reduction_constant(const Rational& alpha, int m, int k) {
  const int N = fueter_order(m, k);
  Rational p(1);
  for (int j = 1; j <= N; ++j) p *= alpha + j;
  if (sgn(p) == 0) throw PreconditionError("alpha excluded: alpha must avoid {-1, ..., -k-(m-1)/2}");
  Integer s = Integer(1) << N;
  if (N % 2) s = -s;
  return Rational(p * s * double_factorial<Integer>(2 * N));
}

long double gegenbauer_reduction_constant(long double alpha, int m, int k) {
  const int N = fueter_order(m, k);
  require_alpha(alpha, m, k);
  long double p = std::pow(-2.0L, static_cast<long double>(N)) * double_factorial<long double>(2 * N);
  for (int j = 1; j <= N; ++j) p *= alpha + j;
  return p;
}

long double gegenbauer_M(long double alpha, int m, int k) {
  const int N = fueter_order(m, k);
  require_alpha(alpha, m, k);
  long double p = std::ldexp(1.0L, k + (m + 1) / 2);
  for (int j = 1; j <= N; ++j) p *= alpha + j;
  return p;
}

namespace {

std::complex<long double> minus_i_pow(int n) {
  switch (((n % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, -1};
    case 2:
      return {-1, 0};
    default:
      return {0, 1};
  }
}

}  // namespace

std::complex<long double> gegen_a(int n, int m, int k) {
  const int N = fueter_order(m, k);
  if (n < 1 || n > N) throw PreconditionError("a_{n,m,k} needs 1 <= n <= k+(m-1)/2");
  const long double v = factorial<long double>(2 * N - n - 1) /
                        (double_factorial<long double>(2 * N - 2 * n) * factorial<long double>(n - 1));
  return minus_i_pow(n) * v;
}

std::complex<long double> gegen_b(int n, int m, int k) {
  const int N = fueter_order(m, k);
  if (n < 0 || n > N) throw PreconditionError("b_{n,m,k} needs 0 <= n <= k+(m-1)/2");
  const long double v =
      factorial<long double>(2 * N - n) / (double_factorial<long double>(2 * N - 2 * n) * factorial<long double>(n));
  return minus_i_pow(n + 1) * v;
}

Expression one_plus_z_squared_pow(long double beta) {
  return expr::pow(expr::constant(1) + expr::pow(expr::z(), 2), beta);
}

std::pair<Expression, Expression> gegenbauer_gf_sums(int m, int k, long double alpha) {
  const int N = fueter_order(m, k);
  require_alpha(alpha, m, k);
  const long double beta = alpha + N;
  auto F = [&](int n, const Expression& W) {
    const UniPoly<long double> q = q_poly_numeric(n, beta);
    std::vector<Expression> terms;
    for (std::size_t p = 0; p < q.coeffs().size(); ++p) {
      if (q.coeffs()[p] == 0) continue;
      terms.push_back(q.coeffs()[p] * expr::pow(W, static_cast<long double>(p)));
    }
    return expr::pow(expr::constant(1) + expr::pow(W, 2), beta - n) * expr::sum(std::move(terms));
  };
  const Expression Z = expr::z();
  const Expression Zc = expr::z_conj();
  std::vector<Expression> a_terms;
  std::vector<Expression> b_terms;
  for (int n = 0; n <= N; ++n) {
    const Expression fz = F(n, Z);
    const Expression fc = F(n, Zc);
    const Expression rp = expr::pow(expr::r(), static_cast<long double>(-(2 * N - n)));
    if (n >= 1) {
      const Expression pair = n % 2 ? fz - fc : fz + fc;
      a_terms.push_back(expr::product({expr::constant(gegen_a(n, m, k)), rp, pair}));
    }
    const Expression pair = n % 2 ? fz + fc : fz - fc;
    b_terms.push_back(expr::product({expr::constant(gegen_b(n, m, k)), rp, pair}));
  }
  return {expr::sum(std::move(a_terms)), expr::sum(std::move(b_terms))};
}

FtResult gegenbauer_gf_closed(int m, int k, long double alpha, const CliffordPolynomial& pk) {
  check_pk(pk, m, k, "gegenbauer_gf_closed");
  const long double M = gegenbauer_M(alpha, m, k);
  auto [a, b] = gegenbauer_gf_sums(m, k, alpha);
  return FtResult(m, k, (1 / M) * a, Part::Real, (1 / M) * b, Part::Real, pk);
}

std::vector<SpacePoint> radial_grid_points(int m, std::span<const double> x0s, std::span<const double> rs,
                                           int directions) {
  check_dimension(m);
  std::vector<std::vector<long double>> dirs;
  for (int d = 0; d < directions; ++d) {
    std::vector<long double> u(m);
    long double n2 = 0;
    for (int j = 0; j < m; ++j) {
      // (1,1,..), (1,2,3,..), (1,-1,1,..), ...
      u[j] = d == 0 ? 1.0L : d == 1 ? j + 1.0L : (j % 2 ? -1.0L : 1.0L) * (1 + (d - 2) * j);
      n2 += u[j] * u[j];
    }
    const long double n = std::sqrt(n2);
    for (auto& v : u) v /= n;
    dirs.push_back(std::move(u));
  }
  std::vector<SpacePoint> out;
  for (double x0 : x0s) {
    for (double r : rs) {
      for (const auto& u : dirs) {
        SpacePoint p{x0, std::vector<long double>(m)};
        for (int j = 0; j < m; ++j) p.x[j] = static_cast<long double>(r) * u[j];
        out.push_back(std::move(p));
      }
    }
  }
  return out;
}

long double monogenicity_residual(const FtResult& f, std::span<const SpacePoint> points, long double h) {
  const int m = f.m();
  // fourth-order central stencil in every coordinate
  auto stencil = [&](long double x0, std::vector<long double>& y, int j) {
    auto at = [&](long double s) {
      if (j == 0) return f.evaluate<long double>(x0 + s, std::span<const long double>(y));
      const long double keep = y[j - 1];
      y[j - 1] = keep + s;
      auto v = f.evaluate<long double>(x0, std::span<const long double>(y));
      y[j - 1] = keep;
      return v;
    };
    Multivector<long double> d = (at(h) - at(-h)) * 8.0L;
    d -= at(2 * h) - at(-2 * h);
    return d;
  };
  long double worst = 0;
  for (const auto& p : points) {
    std::vector<long double> y(p.x);
    Multivector<long double> res = stencil(p.x0, y, 0);
    for (int j = 1; j <= m; ++j) res += stencil(p.x0, y, j).left_generator(j);
    res *= 1 / (12 * h);
    worst = std::max(worst, static_cast<long double>(res.norm()));
  }
  return worst;
}

}  // namespace cliffgen
