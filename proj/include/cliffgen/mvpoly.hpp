#pragma once

// Polynomials in the vector variable x = (x_1, ..., x_m) with coefficients in
// R_{0,m}, exact over the rationals. Hosts the Dirac operator, the raising
// operators D_+ and D_alpha, and both constructions (operator chain and
// Laguerre/Jacobi closed form) of the Clifford-Hermite and
// Clifford-Gegenbauer polynomials.

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "cliffgen/clifford.hpp"
#include "cliffgen/rational.hpp"
#include "cliffgen/unipoly.hpp"

namespace cliffgen {

struct Monomial {
  std::array<std::uint8_t, kMaxDimension> exp{};

  /// x_j, 1-based.
  static Monomial unit(int j);

  int degree() const;
  Monomial operator*(const Monomial& o) const;

  auto operator<=>(const Monomial&) const = default;
};

/// All exponent vectors over x_first..x_m of total degree d.
std::vector<Monomial> monomials_of_degree(int m, int d, int first = 1);

class CliffordPolynomial {
 public:
  using Terms = std::map<Monomial, RationalMultivector>;

  explicit CliffordPolynomial(int m);

  static CliffordPolynomial constant(const RationalMultivector& c);
  static CliffordPolynomial scalar(int m, const Rational& c);
  /// The real coordinate x_j (scalar coefficient), 1-based.
  static CliffordPolynomial coordinate(int m, int j);
  static CliffordPolynomial monomial(int m, const Monomial& mono, const RationalMultivector& c);

  int dim() const { return m_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Number of (monomial, blade) coefficients stored.
  std::size_t coefficient_count() const;

  void add_term(const Monomial& mono, const RationalMultivector& c);
  void add_term(const Monomial& mono, std::uint32_t blade, const Rational& c);

  CliffordPolynomial& operator+=(const CliffordPolynomial& o);
  CliffordPolynomial& operator-=(const CliffordPolynomial& o);
  CliffordPolynomial& operator*=(const Rational& s);

  friend CliffordPolynomial operator+(CliffordPolynomial a, const CliffordPolynomial& b) {
    return a += b;
  }
  friend CliffordPolynomial operator-(CliffordPolynomial a, const CliffordPolynomial& b) {
    return a -= b;
  }
  friend CliffordPolynomial operator-(CliffordPolynomial a) { return a *= Rational(-1); }
  friend CliffordPolynomial operator*(CliffordPolynomial a, const Rational& s) { return a *= s; }
  friend CliffordPolynomial operator*(const Rational& s, CliffordPolynomial a) { return a *= s; }

  /// Clifford product of polynomials (coordinates commute, coefficients do not).
  friend CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b);
  friend CliffordPolynomial operator*(const CliffordPolynomial& p, const RationalMultivector& c);
  friend CliffordPolynomial operator*(const RationalMultivector& c, const CliffordPolynomial& p);

  /// Partial derivative in x_j, 1-based.
  CliffordPolynomial derivative(int j) const;

  /// Terms of total degree d only.
  CliffordPolynomial homogeneous_part(int d) const;
  int max_degree() const;

  template <class T>
  Multivector<T> evaluate(std::span<const T> x) const;

  friend bool operator==(const CliffordPolynomial& a, const CliffordPolynomial& b) {
    return a.m_ == b.m_ && a.terms_ == b.terms_;
  }

  std::string to_string() const;

 private:
  int m_;
  Terms terms_;
};

/// x = sum_j x_j e_j.
CliffordPolynomial vector_variable(int m);
/// |x|^2 = sum_j x_j^2.
CliffordPolynomial norm_squared(int m);

/// Left Dirac operator sum_j e_j d/dx_j.
CliffordPolynomial dirac(const CliffordPolynomial& p);
/// x * p with x acting on the left.
CliffordPolynomial vector_times(const CliffordPolynomial& p);
CliffordPolynomial laplacian(const CliffordPolynomial& p);
/// sum_j x_j d/dx_j.
CliffordPolynomial euler_operator(const CliffordPolynomial& p);

/// k when p is homogeneous of degree k, std::nullopt otherwise. Throws on p = 0.
std::optional<int> euler_degree(const CliffordPolynomial& p);

bool is_monogenic(const CliffordPolynomial& p);
void require_monogenic(const CliffordPolynomial& p, const char* where);

/// D_+ p = 2 x p - dirac(p).
CliffordPolynomial apply_D_plus(const CliffordPolynomial& p);
/// D_alpha p = 2(alpha+1) x p - (1 - |x|^2) dirac(p).
CliffordPolynomial apply_D_alpha(const CliffordPolynomial& p, const Rational& alpha);

/// H_{n,m}(P_k) = D_+^n P_k.
CliffordPolynomial hermite_operator(int n, const CliffordPolynomial& pk);
/// C^{(alpha)}_{n,m}(P_k) = D_alpha D_{alpha+1} ... D_{alpha+n-1} P_k; the rightmost acts first.
CliffordPolynomial gegenbauer_operator(int n, const Rational& alpha, const CliffordPolynomial& pk);

/// H_{n,m,k}(x): 2^{2q} q! L_q^{(k+m/2-1)}(|x|^2) for n = 2q,
/// 2^{2q+1} q! x L_q^{(k+m/2)}(|x|^2) for n = 2q+1.
CliffordPolynomial explicit_hermite(int n, int m, int k);
/// C^{(alpha)}_{n,m,k}(x) through Jacobi polynomials in 1 - 2|x|^2.
CliffordPolynomial explicit_gegenbauer(int n, int m, int k, const Rational& alpha);

/// u(t) with t replaced by a polynomial argument.
CliffordPolynomial substitute(const UniPoly<Rational>& u, const CliffordPolynomial& t);

struct MonogenicBasis {
  int m = 0;
  int k = 0;
  std::vector<CliffordPolynomial> elements;
};

/// A basis of the degree-k homogeneous monogenics as a right R_{0,m}-module:
/// one element per scalar monomial in x_2..x_m, namely the monogenic
/// polynomial whose restriction to x_1 = 0 is that monomial.
MonogenicBasis monogenic_basis(int m, int k);

/// Real basis of ker(dirac) on degree-k polynomials with full Clifford
/// coefficients, from exact Gauss-Jordan elimination on the Dirac matrix.
/// Size grows like 2^m C(m+k-1, k); refuses systems with more than
/// `max_unknowns` columns.
std::vector<CliffordPolynomial> monogenic_nullspace(int m, int k, std::size_t max_unknowns = 8192);

template <class T>
Multivector<T> CliffordPolynomial::evaluate(std::span<const T> x) const {
  if (static_cast<int>(x.size()) != m_) throw PreconditionError("evaluation point dimension mismatch");
  Multivector<T> out(m_);
  for (const auto& [mono, mv] : terms_) {
    T value(1);
    for (int j = 0; j < m_; ++j) {
      for (int e = 0; e < mono.exp[j]; ++e) value *= x[j];
    }
    for (const auto& [blade, c] : mv.terms()) {
      out.add_term(blade, value * static_cast<T>(to_long_double(c)));
    }
  }
  return out;
}

}  // namespace cliffgen
