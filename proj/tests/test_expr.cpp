#include <doctest.h>

#include <cmath>

#include "cliffgen/expr.hpp"
#include "cliffgen/expr_program.hpp"
#include "cliffgen/parser.hpp"

using namespace cliffgen;
using namespace cliffgen::expr;

namespace {

long double err(const Expression& a, const Expression& b, long double x0, long double r) {
  return std::abs(evaluate<long double>(a, x0, r) - evaluate<long double>(b, x0, r));
}

}  // namespace

TEST_CASE("parse basics") {
  const auto e = parse("exp(z^2)");
  CHECK(e.kind() == Kind::Exp);
  // exp((x0 + i r)^2) at (0.3, 0.4)
  const std::complex<long double> z(0.3L, 0.4L);
  CHECK(std::abs(evaluate<long double>(e, 0.3L, 0.4L) - std::exp(z * z)) < 1e-18L);
  const auto p = parse("(1+z^2)^(2.5)");
  CHECK(p.kind() == Kind::Power);
  CHECK(p.exponent() == 2.5L);
  CHECK(parse("-x0^2").kind() == Kind::Neg);
  CHECK(std::abs(evaluate<long double>(parse("2e-1*r - -x0"), 1, 2) - std::complex<long double>(1.4L, 0)) < 1e-18L);
  CHECK(parse("x0*r") == parse("r*x0"));
}

TEST_CASE("parse errors carry offsets") {
  try {
    parse("x0^");
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.offset() == 3);
  }
  CHECK_THROWS_AS(parse("foo(x0)"), ParseError);
  CHECK_THROWS_AS(parse("(x0 + r"), ParseError);
  CHECK_THROWS_AS(parse("x0 r"), ParseError);
  CHECK_THROWS_AS(parse(""), ParseError);
  CHECK_THROWS_AS(parse("x0^r"), ParseError);
}

TEST_CASE("round trip through to_string") {
  for (const char* s : {"exp(x0^2 - r^2)*cos(2*x0*r)", "(1 + z^2)^(-0.7)", "i*z^-3 + sin(r)^2", "r^-2*exp(-r)"}) {
    const auto e = parse(s);
    const auto back = parse(e.to_string());
    CHECK(err(e, back, 0.37L, 0.81L) < 1e-17L);
  }
}

TEST_CASE("derivatives") {
  const auto g = parse("exp(x0^2 - r^2)");
  CHECK(err(diff(g, Var::R), parse("-2*r*exp(x0^2 - r^2)"), 0.4L, 1.1L) < 1e-18L);
  CHECK(err(diff(parse("cos(2*x0*r)"), Var::R), parse("-2*x0*sin(2*x0*r)"), 0.4L, 1.1L) < 1e-18L);
  // holomorphic: d/dr h = i dh/dx0
  const auto h = parse("(1 + z^2)^(2.5)*exp(z)");
  const auto lhs = diff(h, Var::R);
  const auto rhs = std::complex<long double>(0, 1) * diff(h, Var::X0);
  CHECK(err(lhs, rhs, 0.2L, 0.3L) < 1e-17L);
  CHECK(diff(parse("x0^3"), Var::X0, 4).is_zero());
}

TEST_CASE("simplification keeps trees small") {
  const auto e = parse("x0 + x0 + 2*x0");
  CHECK(e == parse("4*x0"));
  CHECK(parse("r*r^-1").is_one());
  CHECK(parse("0*exp(r)").is_zero());
  CHECK(node_count(parse("x0*x0*x0")) <= 3);
}

TEST_CASE("evaluation domain errors") {
  CHECK(std::abs(evaluate<long double>(parse("exp(x0^2 - r^2)"), 0, 1) - std::exp(-1.0L)) < 1e-18L);
  CHECK(std::abs(evaluate<long double>(parse("(1 + z^2)^(0.5)"), 0, 0.6L) - 0.8L) < 1e-18L);
  CHECK_THROWS_AS(evaluate<long double>(parse("r^-3"), 0, 0), PoleError);
  CHECK_THROWS_AS(evaluate<double>(parse("(x0 - 1)^(0.5)"), 0, 1), BranchCutError);
  CHECK_NOTHROW(evaluate<double>(parse("(x0 - 1)^2"), 0, 1));
  CHECK(parse("(1 + z^2)^(0.5)").is_real() == false);
}

TEST_CASE("compiled program matches the tree walk") {
  const auto e = parse("exp(z^2)*(1+z^2)^(1.5)*r^-2 + sin(x0*r)");
  const Program p(e);
  for (double x0 : {-0.7, 0.1, 0.4}) {
    for (double r : {0.3, 1.1}) {
      CHECK(std::abs(p(static_cast<long double>(x0), static_cast<long double>(r)) -
                     evaluate<long double>(e, x0, r)) < 1e-17L);
      CHECK(std::abs(p(x0, r) - eval(e, x0, r)) < 1e-13);
    }
  }
  CHECK_THROWS_AS(p(0.1L, 0.0L), PoleError);
}
