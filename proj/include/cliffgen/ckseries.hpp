#pragma once

// Truncated CK extensions: the terminating series of a polynomial seed and
// the Hermite / Gegenbauer weighted series
//   CK[exp(-|x|^2) P_k]      = exp(-|x|^2) sum_n x0^n/n! H_{n,m}(P_k)
//   CK[(1-|x|^2)^alpha P_k]  = sum_n x0^n/n! (1-|x|^2)^{alpha-n} C^{(alpha-n)}_{n,m}(P_k).

#include <optional>
#include <span>
#include <vector>

#include "cliffgen/fueter.hpp"
#include "cliffgen/mvpoly.hpp"
#include "cliffgen/simd/radial_kernels.hpp"

namespace cliffgen {

/// CK[g] = sum_n x0^n coeffs[n], coeffs[n] = (-1)^n/n! dirac^n g.
struct GenericCK {
  int m = 0;
  std::vector<CliffordPolynomial> coeffs;

  const CliffordPolynomial& restriction() const { return coeffs.front(); }
  /// Coefficient of x0^n in (d/dx0 + dirac) CK[g]: (n+1) coeffs[n+1] + dirac(coeffs[n]).
  std::vector<CliffordPolynomial> cauchy_riemann_residual() const;
  bool is_monogenic() const;
  Multivector<long double> evaluate(long double x0, std::span<const long double> x) const;
};

GenericCK ck_generic(const CliffordPolynomial& g);

enum class CoefficientSource { Explicit, Operator };

/// H_{n,m}(P_k), n = 0..N.
std::vector<CliffordPolynomial> hermite_series_coefficients(const CliffordPolynomial& pk, int k, int N,
                                                            CoefficientSource src);
/// C^{(alpha-n)}_{n,m}(P_k), n = 0..N (weight not included).
std::vector<CliffordPolynomial> gegenbauer_series_coefficients(const CliffordPolynomial& pk, int k,
                                                               const Rational& alpha, int N, CoefficientSource src);

class HermiteSeries {
 public:
  HermiteSeries(int m, int k, CliffordPolynomial pk, int N);

  int m() const { return m_; }
  int k() const { return k_; }
  int truncation() const { return N_; }

  /// Scalar and w parts, long double reference path.
  RadialPair<long double> radial(long double x0, long double r) const;
  /// Same through the batched double kernels.
  void radial_batch(std::span<const double> x0, std::span<const double> r, std::span<double> A,
                    std::span<double> B, std::optional<simd::Isa> isa = std::nullopt) const;
  /// exp(-|x|^2) sum_n x0^n/n! H_{n,m,k}(x) P_k(x) in Clifford arithmetic.
  Multivector<long double> evaluate(long double x0, std::span<const long double> x) const;

  const simd::HermiteTable& table() const { return table_; }

 private:
  int m_, k_, N_;
  CliffordPolynomial pk_;
  simd::HermiteTable table_;
};

class GegenbauerSeries {
 public:
  GegenbauerSeries(int m, int k, long double alpha, CliffordPolynomial pk, int N);

  int m() const { return m_; }
  int k() const { return k_; }
  long double alpha() const { return alpha_; }
  int truncation() const { return N_; }

  /// Throws DomainError for r >= 1 unless alpha is an integer and r != 1.
  RadialPair<long double> radial(long double x0, long double r) const;
  void radial_batch(std::span<const double> x0, std::span<const double> r, std::span<double> A,
                    std::span<double> B, std::optional<simd::Isa> isa = std::nullopt) const;
  Multivector<long double> evaluate(long double x0, std::span<const long double> x) const;

  const simd::GegenbauerTable& table() const { return table_; }

 private:
  void check_domain(long double t) const;

  int m_, k_;
  long double alpha_;
  int N_;
  CliffordPolynomial pk_;
  simd::GegenbauerTable table_;
};

HermiteSeries ck_hermite_series(int m, int k, const CliffordPolynomial& pk, int N = 30);
GegenbauerSeries ck_gegenbauer_series(int m, int k, long double alpha, const CliffordPolynomial& pk, int N = 25);

/// P_k used when a caller only fixes (m, k): 1 for k = 0, else the first basis element.
CliffordPolynomial default_pk(int m, int k, int index = 0);

}  // namespace cliffgen
