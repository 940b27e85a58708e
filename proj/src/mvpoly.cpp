#include "cliffgen/mvpoly.hpp"

#include <sstream>

#include "cliffgen/classical.hpp"
#include "cliffgen/linalg.hpp"

namespace cliffgen {

Monomial Monomial::unit(int j) {
  if (j < 1 || j > kMaxDimension) throw PreconditionError("coordinate index out of range");
  Monomial out;
  out.exp[j - 1] = 1;
  return out;
}

int Monomial::degree() const {
  int d = 0;
  for (auto e : exp) d += e;
  return d;
}

Monomial Monomial::operator*(const Monomial& o) const {
  Monomial out;
  for (int j = 0; j < kMaxDimension; ++j) {
    const int e = exp[j] + o.exp[j];
    if (e > 255) throw PreconditionError("monomial exponent overflow");
    out.exp[j] = static_cast<std::uint8_t>(e);
  }
  return out;
}

namespace {

void monomials_rec(int m, int j, int remaining, Monomial& cur, std::vector<Monomial>& out) {
  if (j == m - 1) {
    cur.exp[j] = static_cast<std::uint8_t>(remaining);
    out.push_back(cur);
    cur.exp[j] = 0;
    return;
  }
  for (int e = 0; e <= remaining; ++e) {
    cur.exp[j] = static_cast<std::uint8_t>(e);
    monomials_rec(m, j + 1, remaining - e, cur, out);
  }
  cur.exp[j] = 0;
}

}  // namespace

std::vector<Monomial> monomials_of_degree(int m, int d, int first) {
  check_dimension(m);
  std::vector<Monomial> out;
  if (d < 0 || first > m) return out;
  Monomial cur;
  monomials_rec(m, first - 1, d, cur, out);
  return out;
}

CliffordPolynomial::CliffordPolynomial(int m) : m_(m) { check_dimension(m); }

CliffordPolynomial CliffordPolynomial::constant(const RationalMultivector& c) {
  CliffordPolynomial out(c.dim());
  out.add_term(Monomial{}, c);
  return out;
}

CliffordPolynomial CliffordPolynomial::scalar(int m, const Rational& c) {
  return constant(RationalMultivector::scalar(m, c));
}

CliffordPolynomial CliffordPolynomial::coordinate(int m, int j) {
  if (j < 1 || j > m) throw PreconditionError("coordinate index out of range");
  CliffordPolynomial out(m);
  out.add_term(Monomial::unit(j), 0, Rational(1));
  return out;
}

CliffordPolynomial CliffordPolynomial::monomial(int m, const Monomial& mono,
                                                const RationalMultivector& c) {
  CliffordPolynomial out(m);
  out.add_term(mono, c);
  return out;
}

std::size_t CliffordPolynomial::coefficient_count() const {
  std::size_t n = 0;
  for (const auto& [mono, mv] : terms_) n += mv.terms().size();
  return n;
}

void CliffordPolynomial::add_term(const Monomial& mono, const RationalMultivector& c) {
  if (c.dim() != m_) throw PreconditionError("coefficient dimension mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(mono, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void CliffordPolynomial::add_term(const Monomial& mono, std::uint32_t blade, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, inserted] = terms_.try_emplace(mono, m_);
  it->second.add_term(blade, c);
  if (it->second.is_zero()) terms_.erase(it);
}

CliffordPolynomial& CliffordPolynomial::operator+=(const CliffordPolynomial& o) {
  if (o.m_ != m_) throw PreconditionError("polynomial dimension mismatch");
  for (const auto& [mono, c] : o.terms_) add_term(mono, c);
  return *this;
}

CliffordPolynomial& CliffordPolynomial::operator-=(const CliffordPolynomial& o) {
  if (o.m_ != m_) throw PreconditionError("polynomial dimension mismatch");
  for (const auto& [mono, c] : o.terms_) add_term(mono, -c);
  return *this;
}

CliffordPolynomial& CliffordPolynomial::operator*=(const Rational& s) {
  if (sgn(s) == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [mono, c] : terms_) c *= s;
  return *this;
}

CliffordPolynomial operator*(const CliffordPolynomial& a, const CliffordPolynomial& b) {
  if (a.m_ != b.m_) throw PreconditionError("polynomial dimension mismatch");
  CliffordPolynomial out(a.m_);
  for (const auto& [ma, ca] : a.terms_) {
    for (const auto& [mb, cb] : b.terms_) out.add_term(ma * mb, ca * cb);
  }
  return out;
}

CliffordPolynomial operator*(const CliffordPolynomial& p, const RationalMultivector& c) {
  CliffordPolynomial out(p.m_);
  for (const auto& [mono, mv] : p.terms_) out.add_term(mono, mv * c);
  return out;
}

CliffordPolynomial operator*(const RationalMultivector& c, const CliffordPolynomial& p) {
  CliffordPolynomial out(p.m_);
  for (const auto& [mono, mv] : p.terms_) out.add_term(mono, c * mv);
  return out;
}

CliffordPolynomial CliffordPolynomial::derivative(int j) const {
  if (j < 1 || j > m_) throw PreconditionError("coordinate index out of range");
  CliffordPolynomial out(m_);
  for (const auto& [mono, mv] : terms_) {
    const int e = mono.exp[j - 1];
    if (e == 0) continue;
    Monomial lowered = mono;
    lowered.exp[j - 1] = static_cast<std::uint8_t>(e - 1);
    out.add_term(lowered, mv * Rational(e));
  }
  return out;
}

CliffordPolynomial CliffordPolynomial::homogeneous_part(int d) const {
  CliffordPolynomial out(m_);
  for (const auto& [mono, mv] : terms_) {
    if (mono.degree() == d) out.terms_.emplace(mono, mv);
  }
  return out;
}

int CliffordPolynomial::max_degree() const {
  int d = -1;
  for (const auto& [mono, mv] : terms_) d = std::max(d, mono.degree());
  return d;
}

std::string CliffordPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [mono, mv] : terms_) {
    for (const auto& [blade, c] : mv.terms()) {
      if (!first) os << " + ";
      first = false;
      os << "(" << c << ")";
      if (blade != 0) os << "*" << blade_name(blade);
      for (int j = 0; j < m_; ++j) {
        if (mono.exp[j] == 0) continue;
        os << "*x" << (j + 1);
        if (mono.exp[j] > 1) os << "^" << int(mono.exp[j]);
      }
    }
  }
  return os.str();
}

CliffordPolynomial vector_variable(int m) {
  CliffordPolynomial out(m);
  for (int j = 1; j <= m; ++j) out.add_term(Monomial::unit(j), std::uint32_t{1} << (j - 1), Rational(1));
  return out;
}

CliffordPolynomial norm_squared(int m) {
  CliffordPolynomial out(m);
  for (int j = 1; j <= m; ++j) {
    Monomial mono;
    mono.exp[j - 1] = 2;
    out.add_term(mono, 0, Rational(1));
  }
  return out;
}

CliffordPolynomial dirac(const CliffordPolynomial& p) {
  const int m = p.dim();
  CliffordPolynomial out(m);
  for (const auto& [mono, mv] : p.terms()) {
    for (int j = 1; j <= m; ++j) {
      const int e = mono.exp[j - 1];
      if (e == 0) continue;
      Monomial lowered = mono;
      lowered.exp[j - 1] = static_cast<std::uint8_t>(e - 1);
      RationalMultivector c = mv.left_generator(j);
      c *= Rational(e);
      out.add_term(lowered, c);
    }
  }
  return out;
}

CliffordPolynomial vector_times(const CliffordPolynomial& p) {
  const int m = p.dim();
  CliffordPolynomial out(m);
  for (const auto& [mono, mv] : p.terms()) {
    for (int j = 1; j <= m; ++j) out.add_term(mono * Monomial::unit(j), mv.left_generator(j));
  }
  return out;
}

CliffordPolynomial laplacian(const CliffordPolynomial& p) {
  CliffordPolynomial out(p.dim());
  for (int j = 1; j <= p.dim(); ++j) out += p.derivative(j).derivative(j);
  return out;
}

CliffordPolynomial euler_operator(const CliffordPolynomial& p) {
  CliffordPolynomial out(p.dim());
  for (int j = 1; j <= p.dim(); ++j) {
    out += CliffordPolynomial::coordinate(p.dim(), j) * p.derivative(j);
  }
  return out;
}

std::optional<int> euler_degree(const CliffordPolynomial& p) {
  if (p.is_zero()) throw PreconditionError("euler_degree of the zero polynomial");
  const int k = p.terms().begin()->first.degree();
  if (euler_operator(p) == p * Rational(k)) return k;
  return std::nullopt;
}

bool is_monogenic(const CliffordPolynomial& p) { return dirac(p).is_zero(); }

void require_monogenic(const CliffordPolynomial& p, const char* where) {
  if (!is_monogenic(p)) {
    throw PreconditionError(std::string(where) + ": P_k is not monogenic (dirac(P_k) != 0)");
  }
}

CliffordPolynomial apply_D_plus(const CliffordPolynomial& p) {
  CliffordPolynomial out = vector_times(p);
  out *= Rational(2);
  out -= dirac(p);
  return out;
}

CliffordPolynomial apply_D_alpha(const CliffordPolynomial& p, const Rational& alpha) {
  CliffordPolynomial out = vector_times(p);
  out *= Rational(2 * (alpha + 1));
  const CliffordPolynomial d = dirac(p);
  out -= d;
  out += norm_squared(p.dim()) * d;
  return out;
}

CliffordPolynomial hermite_operator(int n, const CliffordPolynomial& pk) {
  if (n < 0) throw PreconditionError("hermite_operator needs n >= 0");
  require_monogenic(pk, "hermite_operator");
  CliffordPolynomial out = pk;
  for (int i = 0; i < n; ++i) out = apply_D_plus(out);
  return out;
}

CliffordPolynomial gegenbauer_operator(int n, const Rational& alpha, const CliffordPolynomial& pk) {
  if (n < 0) throw PreconditionError("gegenbauer_operator needs n >= 0");
  require_monogenic(pk, "gegenbauer_operator");
  CliffordPolynomial out = pk;
  for (int j = n - 1; j >= 0; --j) out = apply_D_alpha(out, alpha + j);
  return out;
}

CliffordPolynomial substitute(const UniPoly<Rational>& u, const CliffordPolynomial& t) {
  const int m = t.dim();
  const auto& c = u.coeffs();
  if (c.empty()) return CliffordPolynomial(m);
  CliffordPolynomial acc = CliffordPolynomial::scalar(m, c.back());
  for (std::size_t i = c.size() - 1; i-- > 0;) {
    acc = acc * t;
    acc += CliffordPolynomial::scalar(m, c[i]);
  }
  return acc;
}

namespace {

Rational pow2(int n) {
  Integer p;
  mpz_ui_pow_ui(p.get_mpz_t(), 2, static_cast<unsigned long>(n));
  return Rational(p);
}

}  // namespace

CliffordPolynomial explicit_hermite(int n, int m, int k) {
  if (n < 0 || k < 0) throw PreconditionError("explicit_hermite needs n, k >= 0");
  const int q = n / 2;
  const bool odd = n % 2 == 1;
  const Rational lag_alpha = Rational(k) + rational(m, 2) - (odd ? 0 : 1);
  CliffordPolynomial radial = substitute(laguerre_poly(q, lag_alpha), norm_squared(m));
  radial *= pow2(n) * factorial<Rational>(q);
  return odd ? vector_times(radial) : radial;
}

CliffordPolynomial explicit_gegenbauer(int n, int m, int k, const Rational& alpha) {
  if (n < 0 || k < 0) throw PreconditionError("explicit_gegenbauer needs n, k >= 0");
  const int q = n / 2;
  const bool odd = n % 2 == 1;
  const Rational jac_a = Rational(k) + rational(m, 2) - (odd ? 0 : 1);
  CliffordPolynomial arg = CliffordPolynomial::scalar(m, Rational(1)) - norm_squared(m) * Rational(2);
  CliffordPolynomial radial = substitute(jacobi_poly(q, jac_a, alpha), arg);
  const Rational poch = pochhammer<Rational>(alpha + q + 1, odd ? q + 1 : q);
  radial *= pow2(n) * factorial<Rational>(q) * poch;
  return odd ? vector_times(radial) : radial;
}

MonogenicBasis monogenic_basis(int m, int k) {
  check_dimension(m);
  if (m < 2) throw PreconditionError("monogenic_basis needs m >= 2");
  if (k < 0) throw PreconditionError("monogenic_basis needs k >= 0");
  MonogenicBasis basis{m, k, {}};
  const RationalMultivector e1 = RationalMultivector::blade(BladeMask::generator(1, m));
  for (const Monomial& seed : monomials_of_degree(m, k, 2)) {
    // P = sum_n x_1^n / n! (e_1 d')^n seed, with d' the Dirac operator in x_2..x_m.
    CliffordPolynomial cur = CliffordPolynomial::monomial(m, seed, RationalMultivector::scalar(m, 1));
    CliffordPolynomial p(m);
    Monomial x1_pow;
    Rational inv_fact(1);
    for (int n = 0; !cur.is_zero(); ++n) {
      for (const auto& [mono, mv] : cur.terms()) p.add_term(mono * x1_pow, mv * inv_fact);
      CliffordPolynomial next(m);
      for (const auto& [mono, mv] : cur.terms()) {
        for (int j = 2; j <= m; ++j) {
          const int e = mono.exp[j - 1];
          if (e == 0) continue;
          Monomial lowered = mono;
          lowered.exp[j - 1] = static_cast<std::uint8_t>(e - 1);
          next.add_term(lowered, e1 * mv.left_generator(j) * Rational(e));
        }
      }
      cur = std::move(next);
      x1_pow.exp[0] = static_cast<std::uint8_t>(n + 1);
      inv_fact /= n + 1;
    }
    basis.elements.push_back(std::move(p));
  }
  return basis;
}

std::vector<CliffordPolynomial> monogenic_nullspace(int m, int k, std::size_t max_unknowns) {
  check_dimension(m);
  if (k < 0) throw PreconditionError("monogenic_nullspace needs k >= 0");
  const std::uint32_t blades = std::uint32_t{1} << m;
  const auto cols_mono = monomials_of_degree(m, k);
  const auto rows_mono = monomials_of_degree(m, k - 1);
  const std::size_t cols = cols_mono.size() * blades;
  if (cols > max_unknowns) {
    throw PreconditionError("monogenic_nullspace: system with " + std::to_string(cols) +
                            " unknowns exceeds the limit");
  }
  std::map<Monomial, std::size_t> row_index;
  for (std::size_t i = 0; i < rows_mono.size(); ++i) row_index.emplace(rows_mono[i], i);

  RationalMatrix a(std::max<std::size_t>(rows_mono.size() * blades, 1), cols);
  for (std::size_t c = 0; c < cols_mono.size(); ++c) {
    for (std::uint32_t b = 0; b < blades; ++b) {
      const std::size_t col = c * blades + b;
      const Monomial& mono = cols_mono[c];
      for (int j = 1; j <= m; ++j) {
        const int e = mono.exp[j - 1];
        if (e == 0) continue;
        Monomial lowered = mono;
        lowered.exp[j - 1] = static_cast<std::uint8_t>(e - 1);
        const std::uint32_t g = std::uint32_t{1} << (j - 1);
        const std::size_t row = row_index.at(lowered) * blades + (g ^ b);
        a(row, col) += Rational(e * blade_sign(g, b));
      }
    }
  }

  std::vector<CliffordPolynomial> out;
  for (const auto& v : nullspace(a)) {
    CliffordPolynomial p(m);
    for (std::size_t col = 0; col < cols; ++col) {
      if (sgn(v[col]) != 0) p.add_term(cols_mono[col / blades], static_cast<std::uint32_t>(col % blades), v[col]);
    }
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace cliffgen
