#pragma once

// Fueter transform in radial form, the monomial images, the closed-form
// generating functions for the Clifford-Hermite and Clifford-Gegenbauer
// families, and the Q_n^{(beta)} polynomials.
//
// An FtResult represents (A(x0,r) + w B(x0,r)) P_k(x) with w = x/r. A and B are
// complex expressions; which part (real or imaginary) carries the value is
// recorded per component, so the real/imaginary split of h happens at
// evaluation time.

#include <array>
#include <complex>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cliffgen/expr.hpp"
#include "cliffgen/expr_program.hpp"
#include "cliffgen/mvpoly.hpp"
#include "cliffgen/rational.hpp"
#include "cliffgen/unipoly.hpp"

namespace cliffgen {

enum class Part { Real, Imag };

template <class T>
struct RadialPair {
  T a{};  // scalar part
  T b{};  // w part
};

class FtResult {
 public:
  FtResult(int m, int k, expr::Expression a, Part a_part, expr::Expression b, Part b_part, CliffordPolynomial pk);

  int m() const { return m_; }
  int k() const { return k_; }
  const expr::Expression& A() const { return a_; }
  const expr::Expression& B() const { return b_; }
  Part a_part() const { return a_part_; }
  Part b_part() const { return b_part_; }
  const CliffordPolynomial& pk() const { return pk_; }

  /// (A, B) at (x0, r), r > 0.
  template <class T>
  RadialPair<T> radial(T x0, T r) const;

  /// Full value (A + w B) P_k(x) at (x0, x).
  template <class T>
  Multivector<T> evaluate(T x0, std::span<const T> x) const;

  FtResult scaled(long double s) const;

 private:
  int m_;
  int k_;
  expr::Expression a_;
  expr::Expression b_;
  Part a_part_;
  Part b_part_;
  CliffordPolynomial pk_;
  std::shared_ptr<const expr::Program> pa_;
  std::shared_ptr<const expr::Program> pb_;
};

/// Throws PreconditionError("m must be odd") for even m.
void require_odd(int m);
/// k + (m-1)/2 for odd m.
int fueter_order(int m, int k);

/// Ft[h, P_k]: A = (2k+m-1)!! Re D_r(N)[h], B = (2k+m-1)!! Im D^r(N)[h],
/// N = k + (m-1)/2, with h already written in (x0, r) (z -> x0 + i r).
/// P_k must be monogenic and homogeneous of degree k.
FtResult ft_transform(const expr::Expression& h, int m, int k, const CliffordPolynomial& pk);

enum class MonomialVariant { ZPow, IZPow, ZNegPow, IZNegPow };

const char* variant_name(MonomialVariant v);

/// The constant and the CK seed of a monomial image:
///   Ft[h_n, P_k] = constant * CK[x^x_power r^{-over_r} P_k].
struct FtMonomial {
  MonomialVariant variant{};
  int n = 0;
  Rational constant;
  int x_power = 0;
  bool over_r = false;

  /// h_n as an expression in (x0, r).
  expr::Expression h() const;
  /// Seed restricted to x0 = 0 in (scalar, w) form, without the constant and P_k.
  RadialPair<long double> seed(long double r) const;
};

/// c_{1..4,n} for the given variant (n >= 1 for the negative powers).
Rational lemma_constant(MonomialVariant v, int n, int m, int k);
FtMonomial ft_monomial(int n, MonomialVariant v, int m, int k);

/// CK[exp(-|x|^2) P_k] in closed form (radial operators by composition).
FtResult hermite_gf_closed(int m, int k, const CliffordPolynomial& pk);
/// exp(z^2) written in (x0, r).
expr::Expression exp_z_squared();

/// m = 3, k = 0 displayed formulas, kept as literal DSL text.
FtResult hermite_reference_m3();
FtResult gegenbauer_reference_m3(long double alpha);
extern const char* const kHermiteReferenceA;
extern const char* const kHermiteReferenceB;

/// Q_n^{(beta)}: Q_{n+1} = 2(beta - n) z Q_n + (1 + z^2) Q_n', Q_0 = 1.
struct QPoly {
  int n = 0;
  Rational beta;
  UniPoly<Rational> coeffs;
};
QPoly q_poly(int n, const Rational& beta);
UniPoly<long double> q_poly_numeric(int n, long double beta);

/// alpha in {-1, ..., -N} makes the reduction constant vanish.
bool alpha_forbidden(long double alpha, int m, int k);
/// (-2)^N (2k+m-1)!! prod_{j=1..N} (alpha + j).
Rational gegenbauer_reduction_constant(const Rational& alpha, int m, int k);
long double gegenbauer_reduction_constant(long double alpha, int m, int k);
/// M = 2^{k+(m+1)/2} prod_{j=1..N} (alpha + j).
long double gegenbauer_M(long double alpha, int m, int k);

/// a_{n,m,k}, b_{n,m,k} of the Gegenbauer closed form (purely imaginary or real).
std::complex<long double> gegen_a(int n, int m, int k);
std::complex<long double> gegen_b(int n, int m, int k);

/// The two bracketed sums of the Gegenbauer closed form, before division by M.
std::pair<expr::Expression, expr::Expression> gegenbauer_gf_sums(int m, int k, long double alpha);
/// CK[(1-|x|^2)^alpha P_k] in closed form.
FtResult gegenbauer_gf_closed(int m, int k, long double alpha, const CliffordPolynomial& pk);
/// (1 + z^2)^beta written in (x0, r).
expr::Expression one_plus_z_squared_pow(long double beta);

/// A point (x0, x_1..x_m) of R^{m+1}.
struct SpacePoint {
  long double x0 = 0;
  std::vector<long double> x;
};

/// Points x = r u along a few fixed unit directions u, for every (x0, r).
std::vector<SpacePoint> radial_grid_points(int m, std::span<const double> x0s, std::span<const double> rs,
                                           int directions = 2);

/// max over points of |(d/dx0 + sum_j e_j d/dx_j) f| by fourth-order central differences.
long double monogenicity_residual(const FtResult& f, std::span<const SpacePoint> points, long double h = 1e-4L);

/// |got - want| / max(1, |want|).
template <class T>
T mixed_error(T got, T want) {
  using std::abs;
  using std::max;
  return abs(got - want) / max(T(1), abs(want));
}

}  // namespace cliffgen
