#include <doctest.h>

#include <cmath>

#include "cliffgen/ckseries.hpp"
#include "cliffgen/classical.hpp"
#include "cliffgen/fueter.hpp"
#include "cliffgen/parser.hpp"

using namespace cliffgen;
using LD = long double;

namespace {

CliffordPolynomial one(int m) { return CliffordPolynomial::scalar(m, Rational(1)); }

// CK[g] summed from its definition with exact radial Laplacians (oracles.py)
struct Oracle {
  int m;
  double alpha;
  LD x0, r, A, B;
};

}  // namespace

TEST_CASE("preconditions") {
  CHECK_THROWS_WITH_AS(require_odd(4), "m must be odd", PreconditionError);
  CHECK_THROWS_AS(ft_transform(exp_z_squared(), 4, 0, one(4)), PreconditionError);
  CHECK_THROWS_AS(ft_transform(exp_z_squared(), 3, 1, vector_variable(3)), PreconditionError);
  CHECK_THROWS_AS(ft_transform(exp_z_squared(), 3, 2, monogenic_basis(3, 1).elements[0]), PreconditionError);
  CHECK(fueter_order(3, 0) == 1);
  CHECK(fueter_order(7, 2) == 5);
}

TEST_CASE("ft of exp(z^2) at x0 = 0") {
  // (2N)!! Re D_r[exp(z^2)] = 2 * (-2) exp(-r^2) for m = 3, k = 0
  const auto f = ft_transform(exp_z_squared(), 3, 0, one(3));
  const auto v = f.radial<LD>(0, 1);
  CHECK(v.a == doctest::Approx(-4 * std::exp(-1.0)).epsilon(1e-15));
  CHECK(std::abs(v.b) < 1e-18L);
}

TEST_CASE("lemma constants") {
  CHECK(lemma_constant(MonomialVariant::ZPow, 2, 3, 0) == -4);
  CHECK(lemma_constant(MonomialVariant::IZPow, 2, 3, 0) == 1);
  CHECK(lemma_constant(MonomialVariant::ZPow, 1, 3, 0) == 0);
  // n < 2k + m - 1 gives the zero function
  const auto f = ft_transform(expr::parse("z"), 3, 0, one(3));
  CHECK(std::abs(f.radial<LD>(0.3L, 0.8L).a) < 1e-18L);
  CHECK(std::abs(f.radial<LD>(0.3L, 0.8L).b) < 1e-18L);
  const auto g = ft_transform(expr::parse("i*z^2"), 3, 0, one(3));
  const auto fm = ft_monomial(2, MonomialVariant::IZPow, 3, 0);
  const auto s = fm.seed(0.7L);
  const LD c = to_long_double(fm.constant);
  CHECK(g.radial<LD>(0, 0.7L).a == doctest::Approx(static_cast<double>(c * s.a)));
  CHECK(g.radial<LD>(0, 0.7L).b == doctest::Approx(static_cast<double>(c * s.b)));
  CHECK_THROWS_AS(ft_monomial(0, MonomialVariant::ZNegPow, 3, 0), PreconditionError);
}

TEST_CASE("linearity") {
  const auto h1 = expr::parse("exp(z^2)"), h2 = expr::parse("z^6");
  const auto f = ft_transform(2.5L * h1 + (-1.25L) * h2, 5, 1, monogenic_basis(5, 1).elements[2]);
  const auto a = ft_transform(h1, 5, 1, monogenic_basis(5, 1).elements[2]);
  const auto b = ft_transform(h2, 5, 1, monogenic_basis(5, 1).elements[2]);
  for (double x0 : {-0.5, 0.2}) {
    for (double r : {0.4, 1.3}) {
      const auto v = f.radial<LD>(x0, r), va = a.radial<LD>(x0, r), vb = b.radial<LD>(x0, r);
      CHECK(std::abs(v.a - (2.5L * va.a - 1.25L * vb.a)) < 1e-12L * std::max(1.0L, std::abs(v.a)));
      CHECK(std::abs(v.b - (2.5L * va.b - 1.25L * vb.b)) < 1e-12L * std::max(1.0L, std::abs(v.b)));
    }
  }
}

TEST_CASE("hermite closed form against the CK definition") {
  const Oracle cases[] = {
      {3, 0, 0.5L, 1.2L, 0.228381146149818125046022L, 0.3360675630449576180033819L},
      {5, 0, -0.7L, 0.4L, 4.196011907601588272461742L, -1.280755871002903013476389L},
      {3, 0, 1.0L, 2.0L, -0.05138248842758771217932833L, -0.0261173499516466942201727L},
  };
  for (const auto& c : cases) {
    const auto f = hermite_gf_closed(c.m, 0, one(c.m));
    const auto v = f.radial<LD>(c.x0, c.r);
    CHECK(std::abs(v.a - c.A) < 1e-15L);
    CHECK(std::abs(v.b - c.B) < 1e-15L);
  }
}

TEST_CASE("hermite closed form basics") {
  const auto f = hermite_gf_closed(3, 0, one(3));
  for (double r : {0.3, 1.0, 1.9}) {
    CHECK(f.radial<LD>(0, r).a == doctest::Approx(std::exp(-r * r)).epsilon(1e-15));
    CHECK(std::abs(f.radial<LD>(0, r).b) < 1e-18L);
  }
  const auto ref = hermite_reference_m3();
  for (double x0 : {-1.0, 0.3}) {
    for (double r : {0.2, 1.4}) {
      CHECK(std::abs(ref.radial<LD>(x0, r).a - f.radial<LD>(x0, r).a) < 1e-12L);
      CHECK(std::abs(ref.radial<LD>(x0, r).b - f.radial<LD>(x0, r).b) < 1e-12L);
    }
  }
  CHECK_THROWS_AS(f.radial<LD>(0.5L, 0.0L), PoleError);
}

TEST_CASE("gegenbauer closed form against the CK definition") {
  const Oracle cases[] = {
      {3, 1.5, 0.1L, 0.3L, 0.9098059862990007037699692L, 0.08665292583026470526780722L},
      {3, 0.5, -0.15L, 0.5L, 0.9084951614381613872351182L, -0.08411934578283579474137582L},
      {5, -0.3, 0.05L, 0.2L, 1.008298608063959082266314L, -0.006275953977281263535527148L},
  };
  for (const auto& c : cases) {
    const auto f = gegenbauer_gf_closed(c.m, 0, c.alpha, one(c.m));
    const auto v = f.radial<LD>(c.x0, c.r);
    CHECK(std::abs(v.a - c.A) < 1e-15L);
    CHECK(std::abs(v.b - c.B) < 1e-15L);
  }
}

TEST_CASE("gegenbauer closed form basics") {
  const auto f = gegenbauer_gf_closed(3, 0, 1.5, one(3));
  CHECK(f.radial<LD>(0, 0.6L).a == doctest::Approx(0.512).epsilon(1e-15));
  for (double r : {0.2, 0.5, 0.9}) {
    CHECK(f.radial<LD>(0, r).a == doctest::Approx(std::pow(1 - r * r, 1.5)).epsilon(1e-14));
    CHECK(std::abs(f.radial<LD>(0, r).b) < 1e-17L);
  }
  for (double alpha : {0.5, 1.5, 2.0, -0.3}) {
    const auto ref = gegenbauer_reference_m3(alpha);
    const auto g = gegenbauer_gf_closed(3, 0, alpha, one(3));
    CHECK(std::abs(ref.radial<LD>(0.25L, 0.45L).a - g.radial<LD>(0.25L, 0.45L).a) < 1e-12L);
    CHECK(std::abs(ref.radial<LD>(0.25L, 0.45L).b - g.radial<LD>(0.25L, 0.45L).b) < 1e-12L);
  }
  CHECK_THROWS_AS(gegenbauer_gf_closed(3, 0, -1.0, one(3)), PreconditionError);
  CHECK_THROWS_AS(gegenbauer_gf_closed(5, 1, -2.0, monogenic_basis(5, 1).elements[0]), PreconditionError);
}

TEST_CASE("reduction constant and M") {
  for (double a : {0.5, 2.0, -0.3}) {
    CHECK(gegenbauer_reduction_constant(static_cast<LD>(a), 3, 0) == doctest::Approx(-4 * (a + 1)));
    CHECK(gegenbauer_reduction_constant(static_cast<LD>(a), 3, 1) == doctest::Approx(32 * (a + 1) * (a + 2)));
    CHECK(gegenbauer_M(a, 3, 0) == doctest::Approx(4 * (a + 1)));
  }
  CHECK(gegenbauer_reduction_constant(rational(1, 2), 3, 1) == 120);
  CHECK_THROWS_AS(gegenbauer_reduction_constant(Rational(-1), 3, 0), PreconditionError);
  CHECK(alpha_forbidden(-2, 3, 1));
  CHECK_FALSE(alpha_forbidden(-2, 3, 0));
}

TEST_CASE("Q polynomials") {
  const Rational b = rational(5, 7);
  const auto z = UniPoly<Rational>::identity();
  const auto c1 = UniPoly<Rational>::constant(1);
  CHECK(q_poly(0, b).coeffs == c1);
  CHECK(q_poly(1, b).coeffs == z * Rational(2 * b));
  CHECK(q_poly(2, b).coeffs == z * z * Rational(4 * b * b - 2 * b) + c1 * Rational(2 * b));
  const auto qn = q_poly_numeric(3, 5.0L / 7);
  const auto qe = q_poly(3, b).coeffs;
  for (int i = 0; i <= 3; ++i) CHECK(qn.coefficient(i) == doctest::Approx(static_cast<double>(to_long_double(qe.coefficient(i)))));
}

TEST_CASE("monogenicity residual detects a violation") {
  const FtResult f(3, 0, expr::x0(), Part::Real, expr::constant(0), Part::Real, one(3));
  const std::vector<double> x0s{0.0, 0.5}, rs{0.5, 1.0};
  const auto pts = radial_grid_points(3, x0s, rs);
  CHECK(monogenicity_residual(f, pts) == doctest::Approx(1).epsilon(1e-9));
  const auto g = hermite_gf_closed(3, 1, monogenic_basis(3, 1).elements[1]);
  CHECK(monogenicity_residual(g, pts) < 1e-9L);
}
