#include <doctest.h>

#include <random>

#include "cliffgen/classical.hpp"
#include "cliffgen/mvpoly.hpp"

using namespace cliffgen;

namespace {

CliffordPolynomial random_poly(int m, int deg, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-3, 3), blade(0, (1 << m) - 1);
  CliffordPolynomial p(m);
  for (int d = 0; d <= deg; ++d) {
    for (const auto& mono : monomials_of_degree(m, d)) {
      const int v = c(rng);
      if (v) p.add_term(mono, static_cast<std::uint32_t>(blade(rng)), rational(v, 2));
    }
  }
  return p;
}

CliffordPolynomial e(int m, int j) {
  return CliffordPolynomial::constant(RationalMultivector::blade(BladeMask::generator(j, m)));
}

CliffordPolynomial x(int m, int j) { return CliffordPolynomial::coordinate(m, j); }

}  // namespace

TEST_CASE("dirac examples") {
  CHECK(dirac(x(3, 1) * e(3, 2) + x(3, 2) * e(3, 1)).is_zero());
  for (int m : {1, 3, 6}) {
    CHECK(dirac(vector_variable(m)) == CliffordPolynomial::scalar(m, Rational(-m)));
    CHECK(dirac(norm_squared(m)) == vector_variable(m) * Rational(2));
  }
  CHECK(vector_variable(3) * vector_variable(3) == -norm_squared(3));
  CHECK(norm_squared(1) == x(1, 1) * x(1, 1));
}

TEST_CASE("dirac squares to minus the laplacian") {
  std::mt19937_64 rng(11);
  for (int m : {2, 3, 4}) {
    for (int t = 0; t < 4; ++t) {
      const auto p = random_poly(m, 4, rng);
      CHECK(dirac(dirac(p)) == -laplacian(p));
    }
  }
}

TEST_CASE("euler degree") {
  CHECK(euler_degree(vector_variable(3)) == 1);
  CHECK(euler_degree(norm_squared(3)) == 2);
  CHECK_FALSE(euler_degree(CliffordPolynomial::scalar(3, Rational(1)) + x(3, 1) * e(3, 1)).has_value());
  CHECK_THROWS(euler_degree(CliffordPolynomial(3)));
}

TEST_CASE("raising operators") {
  const int m = 3;
  const auto one = CliffordPolynomial::scalar(m, Rational(1));
  const auto xv = vector_variable(m);
  CHECK(apply_D_plus(one) == xv * Rational(2));
  CHECK(apply_D_plus(xv * Rational(2)) == norm_squared(m) * Rational(-4) + CliffordPolynomial::scalar(m, Rational(2 * m)));
  const Rational a = rational(1, 3);
  CHECK(apply_D_alpha(one, a) == xv * Rational(2 * (a + 1)));
  const auto basis = monogenic_basis(m, 2);
  for (const auto& p : basis.elements) CHECK(apply_D_alpha(p, a) == xv * p * Rational(2 * (a + 1)));
}

TEST_CASE("hermite and gegenbauer spot values") {
  const int m = 3;
  const auto one = CliffordPolynomial::scalar(m, Rational(1));
  CHECK(hermite_operator(0, one) == one);
  CHECK(hermite_operator(1, one) == vector_variable(m) * Rational(2));
  const auto h2 = one * Rational(6) - norm_squared(m) * Rational(4);
  CHECK(hermite_operator(2, one) == h2);
  CHECK(explicit_hermite(2, m, 0) == h2);
  const Rational a(1);
  CHECK(gegenbauer_operator(1, a, one) == vector_variable(m) * Rational(2 * (a + 1)));
  CHECK(gegenbauer_operator(2, a, one) == explicit_gegenbauer(2, m, 0, a));
  // 2^2 1! (alpha+2)_1 P_1^{(1/2, alpha)}(1 - 2|x|^2)
  const auto t = one - norm_squared(m) * Rational(2);
  const auto p1 = substitute(jacobi_poly<Rational>(1, rational(1, 2), a), t);
  CHECK(gegenbauer_operator(2, a, one) == p1 * Rational(4 * (a + 2)));
  const auto pk = monogenic_basis(m, 1).elements[0];
  CHECK(gegenbauer_operator(2, rational(1, 2), pk) == explicit_gegenbauer(2, m, 1, rational(1, 2)) * pk);
}

TEST_CASE("non-monogenic input is rejected") {
  CHECK_THROWS_AS(hermite_operator(2, vector_variable(3)), PreconditionError);
  CHECK_THROWS_AS(gegenbauer_operator(1, Rational(1), vector_variable(3)), PreconditionError);
}

TEST_CASE("monogenic basis") {
  CHECK(monogenic_basis(3, 0).elements.size() == 1);
  for (int m : {3, 4, 5}) {
    for (int k = 0; k <= 3; ++k) {
      const auto b = monogenic_basis(m, k);
      CHECK(b.elements.size() == static_cast<std::size_t>(binomial(m + k - 2, k).get_si()));
      for (const auto& p : b.elements) {
        CHECK(is_monogenic(p));
        if (k > 0) CHECK(euler_degree(p) == k);
      }
    }
  }
  CHECK(monogenic_basis(7, 3).elements.size() == 56);
}

TEST_CASE("basis agrees with the nullspace of the Dirac matrix") {
  for (auto [m, k] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{4, 2}}) {
    const auto null = monogenic_nullspace(m, k);
    const auto basis = monogenic_basis(m, k);
    // real dimension: one copy of R_{0,m} per right-module generator
    CHECK(null.size() == basis.elements.size() << m);
    for (const auto& p : null) CHECK(is_monogenic(p));
  }
}
