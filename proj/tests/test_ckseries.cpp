#include <doctest.h>

#include <cmath>

#include "cliffgen/ckseries.hpp"

using namespace cliffgen;
using LD = long double;

namespace {

CliffordPolynomial one(int m) { return CliffordPolynomial::scalar(m, Rational(1)); }

LD rel(LD got, LD want) { return std::abs(got - want) / std::max(LD(1), std::abs(want)); }

}  // namespace

TEST_CASE("generic CK extension") {
  const auto c1 = ck_generic(one(3));
  CHECK(c1.coeffs.size() == 1);
  for (int m : {2, 3, 5}) {
    // CK[x] = x + m x0
    const auto cx = ck_generic(vector_variable(m));
    REQUIRE(cx.coeffs.size() == 2);
    CHECK(cx.coeffs[1] == one(m) * Rational(m));
    CHECK(cx.is_monogenic());
  }
  const auto pk = monogenic_basis(5, 2).elements[3];
  CHECK(ck_generic(pk).coeffs.size() == 1);
  const auto g = ck_generic(norm_squared(4) * vector_variable(4));
  CHECK(g.is_monogenic());
  CHECK(g.restriction() == norm_squared(4) * vector_variable(4));
}

TEST_CASE("series coefficients: operator chain equals closed form") {
  const auto pk = monogenic_basis(3, 1).elements[0];
  CHECK(hermite_series_coefficients(pk, 1, 6, CoefficientSource::Explicit) ==
        hermite_series_coefficients(pk, 1, 6, CoefficientSource::Operator));
  CHECK(gegenbauer_series_coefficients(pk, 1, rational(3, 2), 5, CoefficientSource::Explicit) ==
        gegenbauer_series_coefficients(pk, 1, rational(3, 2), 5, CoefficientSource::Operator));
}

TEST_CASE("restriction to x0 = 0") {
  const int m = 3, k = 1;
  const auto pk = monogenic_basis(m, k).elements[1];
  const auto hs = ck_hermite_series(m, k, pk);
  const auto gs = ck_gegenbauer_series(m, k, 1.5, pk);
  const std::vector<LD> x{0.1L, -0.3L, 0.2L};
  const LD t = 0.01L + 0.09L + 0.04L;
  const auto p = pk.evaluate<LD>(x);
  CHECK((hs.evaluate(0, x) - p * std::exp(-t)).norm() < 1e-18L);
  CHECK((gs.evaluate(0, x) - p * std::pow(1 - t, 1.5L)).norm() < 1e-18L);
}

TEST_CASE("hermite series against the CK definition") {
  // oracles.py, m = 3 and 5, P_0 = 1
  const auto s3 = ck_hermite_series(3, 0, one(3));
  const auto s5 = ck_hermite_series(5, 0, one(5));
  CHECK(rel(s3.radial(0.5L, 1.2L).a, 0.228381146149818125046022L) < 1e-15L);
  CHECK(rel(s3.radial(0.5L, 1.2L).b, 0.3360675630449576180033819L) < 1e-15L);
  CHECK(rel(s5.radial(-0.7L, 0.4L).a, 4.196011907601588272461742L) < 1e-15L);
  CHECK(rel(s5.radial(-0.7L, 0.4L).b, -1.280755871002903013476389L) < 1e-15L);
  // x0 = 1 sits at the edge of the grid; N = 30 leaves a ~1e-10 tail
  CHECK(rel(s3.radial(1.0L, 2.0L).a, -0.05138248842758771217932833L) < 1e-9L);
}

TEST_CASE("gegenbauer series against the CK definition") {
  const auto s = ck_gegenbauer_series(3, 0, 1.5, one(3));
  CHECK(rel(s.radial(0.1L, 0.3L).a, 0.9098059862990007037699692L) < 1e-14L);
  CHECK(rel(s.radial(0.1L, 0.3L).b, 0.08665292583026470526780722L) < 1e-14L);
  const auto s5 = ck_gegenbauer_series(5, 0, -0.3, one(5));
  CHECK(rel(s5.radial(0.05L, 0.2L).a, 1.008298608063959082266314L) < 1e-14L);
  CHECK(rel(s5.radial(0.05L, 0.2L).b, -0.006275953977281263535527148L) < 1e-14L);
}

TEST_CASE("truncation converges") {
  const auto a = ck_hermite_series(3, 1, monogenic_basis(3, 1).elements[0], 30);
  const auto b = ck_hermite_series(3, 1, monogenic_basis(3, 1).elements[0], 35);
  LD worst = 0;
  for (int i = 0; i <= 10; ++i) {
    for (int j = 0; j < 10; ++j) {
      const LD x0 = -1 + 0.2L * i, r = 0.2L + 0.2L * j;
      worst = std::max({worst, rel(a.radial(x0, r).a, b.radial(x0, r).a), rel(a.radial(x0, r).b, b.radial(x0, r).b)});
    }
  }
  CHECK(worst < 1e-10L);
  // inside |x0| <= (1 - r)/2, where the x0-series of the Gegenbauer weight converges
  const auto g = ck_gegenbauer_series(3, 0, 0.5, one(3), 30);
  const auto h = ck_gegenbauer_series(3, 0, 0.5, one(3), 35);
  worst = 0;
  for (LD r : {0.2L, 0.4L, 0.6L}) {
    for (LD x0 : {-(1 - r) / 2, 0.0L, (1 - r) / 2}) {
      worst = std::max({worst, rel(g.radial(x0, r).a, h.radial(x0, r).a), rel(g.radial(x0, r).b, h.radial(x0, r).b)});
    }
  }
  CHECK(worst < 1e-10L);
}

TEST_CASE("gegenbauer domain") {
  const auto s = ck_gegenbauer_series(3, 0, 1.5, one(3));
  CHECK_THROWS_AS(s.radial(0.1L, 1.0L), DomainError);
  CHECK_THROWS_AS(s.radial(0.1L, 1.3L), DomainError);
  const auto t = ck_gegenbauer_series(3, 0, 2, one(3));
  CHECK_NOTHROW(t.radial(0.1L, 1.3L));
  CHECK_THROWS_AS(t.radial(0.1L, 1.0L), DomainError);
}

TEST_CASE("multivector evaluation matches the radial parts") {
  const int m = 5, k = 2;
  const auto pk = monogenic_basis(m, k).elements[4];
  const auto s = ck_hermite_series(m, k, pk);
  const std::vector<LD> x{0.2L, -0.1L, 0.4L, 0.3L, -0.5L};
  LD r2 = 0;
  for (LD v : x) r2 += v * v;
  const LD r = std::sqrt(r2);
  const auto ab = s.radial(0.3L, r);
  const auto w = vector_multivector<LD>(m, x) * (1 / r);
  const auto want = (Multivector<LD>::scalar(m, ab.a) + w * ab.b) * pk.evaluate<LD>(x);
  CHECK((s.evaluate(0.3L, x) - want).norm() < 1e-16L);
}

TEST_CASE("batched kernels follow the long double reference") {
  const auto s = ck_hermite_series(3, 0, one(3));
  const std::vector<double> x0{-1, -0.3, 0, 0.4, 0.9}, r{0.2, 0.7, 1.1, 1.6, 2.0};
  std::vector<double> A(5), B(5);
  s.radial_batch(x0, r, A, B);
  for (int i = 0; i < 5; ++i) {
    const auto ref = s.radial(x0[i], r[i]);
    CHECK(rel(A[i], ref.a) < 1e-13L);
    CHECK(rel(B[i], ref.b) < 1e-13L);
  }
  std::vector<double> short_out(4);
  CHECK_THROWS_AS(s.radial_batch(x0, r, short_out, B), PreconditionError);
}

TEST_CASE("argument checks") {
  CHECK_THROWS_AS(ck_hermite_series(3, 1, vector_variable(3)), PreconditionError);
  CHECK_THROWS_AS(ck_hermite_series(3, 0, one(3), -1), PreconditionError);
  CHECK_THROWS_AS(default_pk(3, 1, 2), PreconditionError);
  CHECK(default_pk(3, 0) == one(3));
}
