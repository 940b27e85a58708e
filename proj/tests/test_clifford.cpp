#include <doctest.h>

#include <random>

#include "cliffgen/clifford.hpp"

using namespace cliffgen;

namespace {

RationalMultivector random_mv(int m, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> c(-4, 4);
  RationalMultivector out(m);
  for (std::uint32_t b = 0; b < (1u << m); ++b) out.add_term(b, rational(c(rng), 1 + (b % 3)));
  return out;
}

RationalMultivector e(int j, int m) { return RationalMultivector::blade(BladeMask::generator(j, m)); }

}  // namespace

TEST_CASE("rational helpers") {
  CHECK(rational(2, 4) == Rational(1, 2));
  CHECK(rational(3, -6) == rational(-1, 2));
  CHECK(is_integer(rational(6, 3)));
  CHECK_FALSE(is_integer(rational(1, 3)));
  CHECK(to_string(rational(-3, 4)) == "-3/4");
  // long double keeps the 64-bit mantissa
  CHECK(std::abs(to_long_double(rational(1, 3)) - 1.0L / 3) < 1e-19L);
}

TEST_CASE("generators square to -1 and anticommute") {
  for (int m : {1, 3, 5}) {
    for (int j = 1; j <= m; ++j) {
      for (int k = 1; k <= m; ++k) {
        const auto ac = e(j, m) * e(k, m) + e(k, m) * e(j, m);
        CHECK(ac == RationalMultivector::scalar(m, Rational(j == k ? -2 : 0)));
      }
    }
  }
}

TEST_CASE("blade products") {
  const int m = 3;
  SUBCASE("e1e2 * e2e3 = -e1e3") {
    const auto p = blade_product(BladeMask(0b011, m), BladeMask(0b110, m));
    CHECK(p.sign == -1);
    CHECK(p.mask.bits == 0b101u);
  }
  SUBCASE("e2 * e1 = -e12") {
    const auto p = blade_product(BladeMask(0b010, m), BladeMask(0b001, m));
    CHECK(p.sign == -1);
    CHECK(p.mask.bits == 0b011u);
  }
  SUBCASE("e123 squared") {
    const auto p = blade_product(BladeMask(0b111, m), BladeMask(0b111, m));
    CHECK(p.sign == 1);
    CHECK(p.mask.bits == 0u);
  }
  CHECK(blade_name(0b101) == "e13");
  CHECK(BladeMask(0b110, m).grade() == 2);
}

TEST_CASE("product is associative and left_generator is e_j times") {
  std::mt19937_64 rng(5);
  for (int m : {2, 3, 4}) {
    for (int trial = 0; trial < 5; ++trial) {
      const auto a = random_mv(m, rng), b = random_mv(m, rng), c = random_mv(m, rng);
      CHECK((a * b) * c == a * (b * c));
      for (int j = 1; j <= m; ++j) CHECK(a.left_generator(j) == e(j, m) * a);
    }
  }
}

TEST_CASE("dimension checks") {
  CHECK_THROWS_AS(check_dimension(0), PreconditionError);
  CHECK_THROWS_AS(check_dimension(kMaxDimension + 1), PreconditionError);
  CHECK_THROWS_AS(BladeMask::generator(4, 3), PreconditionError);
  RationalMultivector a(2), b(3);
  CHECK_THROWS_AS(a + b, PreconditionError);
  CHECK_THROWS_AS(a.add_term(0b100, Rational(1)), PreconditionError);
}

TEST_CASE("long double multivectors") {
  const std::vector<long double> v{0.3L, -1.2L, 2.0L};
  const auto x = vector_multivector<long double>(3, v);
  // x^2 = -|x|^2
  const auto sq = x * x;
  CHECK(sq.scalar_part() == doctest::Approx(-(0.09 + 1.44 + 4.0)));
  CHECK(sq.grade_part(2).norm() < 1e-18L);
}
