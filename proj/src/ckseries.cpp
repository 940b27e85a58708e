#include "cliffgen/ckseries.hpp"

#include <cmath>

#include "cliffgen/classical.hpp"

namespace cliffgen {

GenericCK ck_generic(const CliffordPolynomial& g) {
  GenericCK out{g.dim(), {g}};
  for (int n = 0;; ++n) {
    CliffordPolynomial next = dirac(out.coeffs.back()) * rational(-1, n + 1);
    if (next.is_zero()) break;
    out.coeffs.push_back(std::move(next));
  }
  return out;
}

std::vector<CliffordPolynomial> GenericCK::cauchy_riemann_residual() const {
  std::vector<CliffordPolynomial> out;
  for (std::size_t n = 0; n < coeffs.size(); ++n) {
    CliffordPolynomial c = dirac(coeffs[n]);
    if (n + 1 < coeffs.size()) c += coeffs[n + 1] * Rational(static_cast<long>(n + 1));
    out.push_back(std::move(c));
  }
  return out;
}

bool GenericCK::is_monogenic() const {
  for (const auto& c : cauchy_riemann_residual()) {
    if (!c.is_zero()) return false;
  }
  return true;
}

Multivector<long double> GenericCK::evaluate(long double x0, std::span<const long double> x) const {
  Multivector<long double> acc(m);
  long double p = 1;
  for (const auto& c : coeffs) {
    acc += c.evaluate<long double>(x) * p;
    p *= x0;
  }
  return acc;
}

std::vector<CliffordPolynomial> hermite_series_coefficients(const CliffordPolynomial& pk, int k, int N,
                                                            CoefficientSource src) {
  const int m = pk.dim();
  std::vector<CliffordPolynomial> out;
  if (src == CoefficientSource::Operator) {
    out.push_back(hermite_operator(0, pk));
    for (int n = 1; n <= N; ++n) out.push_back(apply_D_plus(out.back()));
  } else {
    require_monogenic(pk, "hermite_series_coefficients");
    for (int n = 0; n <= N; ++n) out.push_back(explicit_hermite(n, m, k) * pk);
  }
  return out;
}

std::vector<CliffordPolynomial> gegenbauer_series_coefficients(const CliffordPolynomial& pk, int k,
                                                               const Rational& alpha, int N, CoefficientSource src) {
  const int m = pk.dim();
  require_monogenic(pk, "gegenbauer_series_coefficients");
  std::vector<CliffordPolynomial> out;
  for (int n = 0; n <= N; ++n) {
    const Rational a = alpha - n;
    out.push_back(src == CoefficientSource::Operator ? gegenbauer_operator(n, a, pk)
                                                     : explicit_gegenbauer(n, m, k, a) * pk);
  }
  return out;
}

namespace {

void check_series_args(int m, int k, int N, const CliffordPolynomial& pk, const char* where) {
  check_dimension(m);
  if (k < 0) throw PreconditionError(std::string(where) + ": k must be >= 0");
  if (N < 0) throw PreconditionError(std::string(where) + ": truncation must be >= 0");
  if (pk.dim() != m) throw PreconditionError(std::string(where) + ": P_k dimension does not match m");
  require_monogenic(pk, where);
}

long double norm2(std::span<const long double> x) {
  long double t = 0;
  for (long double v : x) t += v * v;
  return t;
}

}  // namespace

HermiteSeries::HermiteSeries(int m, int k, CliffordPolynomial pk, int N) : m_(m), k_(k), N_(N), pk_(std::move(pk)) {
  check_series_args(m, k, N, pk_, "ck_hermite_series");
  const long double ae = k + m / 2.0L - 1;
  const long double ao = k + m / 2.0L;
  table_.N = N;
  for (int n = 0; n <= N; ++n) {
    table_.scale.push_back(
        static_cast<double>(std::ldexp(factorial<long double>(n / 2) / factorial<long double>(n), n)));
  }
  table_.even_l1 = static_cast<double>(ae + 1);
  table_.odd_l1 = static_cast<double>(ao + 1);
  for (int q = 0; q <= N / 2 + 1; ++q) {
    table_.even_c1.push_back(static_cast<double>(2 * q + 1 + ae));
    table_.even_c2.push_back(static_cast<double>(q + ae));
    table_.odd_c1.push_back(static_cast<double>(2 * q + 1 + ao));
    table_.odd_c2.push_back(static_cast<double>(q + ao));
    table_.c3.push_back(1.0 / (q + 1));
  }
}

RadialPair<long double> HermiteSeries::radial(long double x0, long double r) const {
  const long double t = r * r;
  long double a = 0, b = 0, p = 1;
  for (int n = 0; n <= N_; ++n) {
    const int q = n / 2;
    const long double c = p * std::ldexp(factorial<long double>(q), n) / factorial<long double>(n);
    if (n % 2 == 0) {
      a += c * laguerre(q, k_ + m_ / 2.0L - 1, t);
    } else {
      b += c * r * laguerre(q, k_ + m_ / 2.0L, t);
    }
    p *= x0;
  }
  const long double w = std::exp(-t);
  return {a * w, b * w};
}

void HermiteSeries::radial_batch(std::span<const double> x0, std::span<const double> r, std::span<double> A,
                                 std::span<double> B, std::optional<simd::Isa> isa) const {
  const std::size_t n = x0.size();
  if (r.size() != n || A.size() != n || B.size() != n) throw PreconditionError("radial_batch: size mismatch");
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) w[i] = std::exp(-r[i] * r[i]);
  simd::hermite_series(table_, n, x0.data(), r.data(), w.data(), A.data(), B.data(), isa);
}

Multivector<long double> HermiteSeries::evaluate(long double x0, std::span<const long double> x) const {
  if (static_cast<int>(x.size()) != m_) throw PreconditionError("evaluation point dimension mismatch");
  const long double t = norm2(x);
  const auto xv = vector_multivector<long double>(m_, x);
  Multivector<long double> acc(m_);
  long double p = 1;
  for (int n = 0; n <= N_; ++n) {
    const int q = n / 2;
    const long double c = std::ldexp(factorial<long double>(q), n);
    const long double w = p / factorial<long double>(n);
    if (n % 2 == 0) {
      acc += Multivector<long double>::scalar(m_, c * laguerre(q, k_ + m_ / 2.0L - 1, t)) * w;
    } else {
      acc += xv * (c * laguerre(q, k_ + m_ / 2.0L, t) * w);
    }
    p *= x0;
  }
  return (acc * pk_.evaluate<long double>(x)) * std::exp(-t);
}

GegenbauerSeries::GegenbauerSeries(int m, int k, long double alpha, CliffordPolynomial pk, int N)
    : m_(m), k_(k), alpha_(alpha), N_(N), pk_(std::move(pk)) {
  check_series_args(m, k, N, pk_, "ck_gegenbauer_series");
  table_.N = N;
  for (int n = 0; n <= N; ++n) {
    const int q = n / 2;
    const long double a = k + m / 2.0L - (n % 2 ? 0 : 1);
    const long double b = alpha - n;
    const long double poch = n % 2 ? pochhammer<long double>(alpha - q, q + 1) : pochhammer<long double>(alpha - q + 1, q);
    table_.scale.push_back(
        static_cast<double>(std::ldexp(factorial<long double>(q), n) * poch / factorial<long double>(n)));
    std::vector<double> row;
    for (int s = 0; s <= q; ++s) {
      row.push_back(static_cast<double>(gen_binomial<long double>(q + a, q - s) * gen_binomial<long double>(q + b, s)));
    }
    table_.jac.push_back(std::move(row));
  }
}

void GegenbauerSeries::check_domain(long double t) const {
  if (t < 1) return;
  if (std::floor(alpha_) == alpha_ && t != 1) return;
  throw DomainError("gegenbauer series needs |x| < 1 (or integer alpha with |x| != 1)");
}

RadialPair<long double> GegenbauerSeries::radial(long double x0, long double r) const {
  const long double t = r * r;
  check_domain(t);
  long double a = 0, b = 0, p = 1;
  for (int n = 0; n <= N_; ++n) {
    const int q = n / 2;
    const long double wt = std::pow(1 - t, alpha_ - n);
    const long double c = p / factorial<long double>(n) * wt * std::ldexp(factorial<long double>(q), n);
    if (n % 2 == 0) {
      a += c * pochhammer<long double>(alpha_ - q + 1, q) * jacobi(q, k_ + m_ / 2.0L - 1, alpha_ - n, 1 - 2 * t);
    } else {
      b += c * pochhammer<long double>(alpha_ - q, q + 1) * r * jacobi(q, k_ + m_ / 2.0L, alpha_ - n, 1 - 2 * t);
    }
    p *= x0;
  }
  return {a, b};
}

void GegenbauerSeries::radial_batch(std::span<const double> x0, std::span<const double> r, std::span<double> A,
                                    std::span<double> B, std::optional<simd::Isa> isa) const {
  const std::size_t n = x0.size();
  if (r.size() != n || A.size() != n || B.size() != n) throw PreconditionError("radial_batch: size mismatch");
  std::vector<double> w(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = r[i] * r[i];
    check_domain(t);
    w[i] = std::pow(1 - t, static_cast<double>(alpha_));
  }
  simd::gegenbauer_series(table_, n, x0.data(), r.data(), w.data(), A.data(), B.data(), isa);
}

Multivector<long double> GegenbauerSeries::evaluate(long double x0, std::span<const long double> x) const {
  if (static_cast<int>(x.size()) != m_) throw PreconditionError("evaluation point dimension mismatch");
  const long double t = norm2(x);
  check_domain(t);
  const auto xv = vector_multivector<long double>(m_, x);
  Multivector<long double> acc(m_);
  long double p = 1;
  for (int n = 0; n <= N_; ++n) {
    const int q = n / 2;
    const long double w = p / factorial<long double>(n) * std::pow(1 - t, alpha_ - n);
    const long double c = std::ldexp(factorial<long double>(q), n);
    if (n % 2 == 0) {
      const long double v =
          c * pochhammer<long double>(alpha_ - q + 1, q) * jacobi(q, k_ + m_ / 2.0L - 1, alpha_ - n, 1 - 2 * t);
      acc += Multivector<long double>::scalar(m_, v * w);
    } else {
      const long double v =
          c * pochhammer<long double>(alpha_ - q, q + 1) * jacobi(q, k_ + m_ / 2.0L, alpha_ - n, 1 - 2 * t);
      acc += xv * (v * w);
    }
    p *= x0;
  }
  return acc * pk_.evaluate<long double>(x);
}

HermiteSeries ck_hermite_series(int m, int k, const CliffordPolynomial& pk, int N) {
  return HermiteSeries(m, k, pk, N);
}

GegenbauerSeries ck_gegenbauer_series(int m, int k, long double alpha, const CliffordPolynomial& pk, int N) {
  return GegenbauerSeries(m, k, alpha, pk, N);
}

CliffordPolynomial default_pk(int m, int k, int index) {
  check_dimension(m);
  if (k == 0 && index == 0) return CliffordPolynomial::scalar(m, Rational(1));
  const auto basis = monogenic_basis(m, k);
  if (index < 0 || index >= static_cast<int>(basis.elements.size())) {
    throw PreconditionError("basis index out of range (" + std::to_string(basis.elements.size()) + " elements)");
  }
  return basis.elements[index];
}

}  // namespace cliffgen
