#include <doctest.h>

#include "cliffgen/classical.hpp"
#include "cliffgen/expr_program.hpp"
#include "cliffgen/parser.hpp"
#include "cliffgen/radial.hpp"

using namespace cliffgen;
using expr::parse;

namespace {

long double diff_at(const expr::Expression& a, const expr::Expression& b, long double x0, long double r) {
  const auto va = expr::evaluate<long double>(a, x0, r), vb = expr::evaluate<long double>(b, x0, r);
  return std::abs(va - vb) / std::max(1.0L, std::abs(vb));
}

}  // namespace

TEST_CASE("coefficient spot values") {
  CHECK(a_coeff(1, 1) == 1);
  CHECK(a_coeff(1, 2) == -1);
  CHECK(a_coeff(2, 3) == -3);
  CHECK(a_coeff(7, 7) == 1);
  CHECK(a_coeff_recursive(2, 3) == -3);
  CHECK_THROWS_AS(a_coeff(0, 3), PreconditionError);
  CHECK_THROWS_AS(b_coeff(4, 3), PreconditionError);
}

TEST_CASE("coefficient rows against sympy composition") {
  // (r^-1 d)^n and (d r^-1)^n expanded by sympy, see oracles.py
  const std::vector<Rational> a3{3, -3, 1}, a5{105, -105, 45, -10, 1};
  const std::vector<Rational> b3{-15, 15, -6, 1}, b5{-945, 945, -420, 105, -15, 1};
  for (int j = 1; j <= 3; ++j) CHECK(a_coeff(j, 3) == a3[j - 1]);
  for (int j = 1; j <= 5; ++j) CHECK(a_coeff(j, 5) == a5[j - 1]);
  for (int j = 0; j <= 3; ++j) CHECK(b_coeff(j, 3) == b3[j]);
  for (int j = 0; j <= 5; ++j) CHECK(b_coeff(j, 5) == b5[j]);
  const auto row = b_table(5);
  for (int j = 0; j <= 5; ++j) CHECK(row.entries.at(j) == b5[j]);
}

TEST_CASE("recursion and closed form agree") {
  for (int n = 1; n <= 15; ++n) {
    const auto row = a_table_recursive(n);
    CHECK(row.entries.size() == static_cast<std::size_t>(n));
    for (int j = 1; j <= n; ++j) CHECK(row.entries.at(j) == a_coeff(j, n));
  }
}

TEST_CASE("b row is the reversed bessel polynomial up to sign") {
  for (int n = 0; n <= 10; ++n) {
    const auto y = bessel_poly_coeffs(n);
    for (int j = 0; j <= n; ++j) {
      Rational b = b_coeff(j, n);
      if ((n + j) % 2) b = -b;
      CHECK(b == y[n - j]);
      CHECK(abs(b_coeff(j, n)) == y[n - j]);
    }
  }
}

TEST_CASE("composed operators") {
  CHECK(expr::evaluate<long double>(radial::D_r_compose(1, parse("r^2")), 0.3L, 0.7L) == std::complex<long double>(2, 0));
  CHECK(std::abs(expr::evaluate<long double>(radial::D_r_upper_compose(1, parse("r")), 0.3L, 0.7L)) < 1e-18L);
  const auto g = parse("exp(x0^2 - r^2)");
  for (int n = 0; n <= 5; ++n) {
    CHECK(diff_at(radial::D_r_compose(n, g), std::pow(-2.0L, static_cast<long double>(n)) * g, 0.3L, 0.9L) < 1e-17L);
  }
  CHECK(radial::D_r_closed(0, g) == g);
  CHECK(radial::D_r_upper_closed(0, g) == g);
}

TEST_CASE("closed forms match composition") {
  for (const char* s : {"cos(2*x0*r)", "sin(2*x0*r)*exp(x0^2-r^2)", "(1 + z^2)^(1.5)", "z^9", "i*z^-4"}) {
    const auto u = parse(s);
    for (int n = 1; n <= 6; ++n) {
      for (double r : {0.3, 0.8, 1.7}) {
        CHECK(diff_at(radial::D_r_closed(n, u), radial::D_r_compose(n, u), 0.35L, r) < 1e-10L);
        CHECK(diff_at(radial::D_r_upper_closed(n, u), radial::D_r_upper_compose(n, u), 0.35L, r) < 1e-10L);
      }
    }
  }
}

TEST_CASE("leibniz rules") {
  const auto f = parse("exp(x0^2 - r^2)"), g = parse("cos(2*x0*r)");
  CHECK(radial::leibniz_D_r(0, f, g) == f * g);
  for (int n = 1; n <= 4; ++n) {
    CHECK(diff_at(radial::leibniz_D_r(n, f, g), radial::D_r_compose(n, f * g), -0.4L, 0.9L) < 1e-14L);
    CHECK(diff_at(radial::leibniz_D_r_upper(n, f, g), radial::D_r_upper_compose(n, f * g), -0.4L, 0.9L) < 1e-14L);
  }
}
