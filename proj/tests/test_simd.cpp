#include <doctest.h>

#include <cstdlib>
#include <cstring>
#include <random>

#include "cliffgen/ckseries.hpp"
#include "cliffgen/simd/radial_kernels.hpp"

using namespace cliffgen;

namespace {

struct Points {
  std::vector<double> x0, r, w;
};

// odd count so the AVX2 tail path runs too
Points make_points(std::size_t n, double rmax, unsigned seed) {
  std::mt19937_64 gen(seed);
  std::uniform_real_distribution<double> ux(-1, 1), ur(0.05, rmax), uw(0.5, 2);
  Points p;
  for (std::size_t i = 0; i < n; ++i) {
    p.x0.push_back(ux(gen) * (rmax < 1 ? 0.3 : 1));
    p.r.push_back(ur(gen));
    p.w.push_back(uw(gen));
  }
  return p;
}

bool same_bits(const std::vector<double>& a, const std::vector<double>& b) {
  return a.size() == b.size() && std::memcmp(a.data(), b.data(), a.size() * sizeof(double)) == 0;
}

struct ResetIsa {
  ~ResetIsa() { simd::set_isa_override(std::nullopt); }
};

}  // namespace

TEST_CASE("hermite kernel: avx2 bitwise equal to scalar") {
  if (!simd::avx2_available()) {
    MESSAGE("avx2 not available, skipped");
    return;
  }
  for (int m : {3, 5, 7}) {
    for (int k : {0, 2}) {
      const auto s = ck_hermite_series(m, k, default_pk(m, k), 30);
      const auto p = make_points(1003, 2.0, 11 * m + k);
      const std::size_t n = p.x0.size();
      std::vector<double> a1(n), b1(n), a2(n), b2(n);
      simd::detail::hermite_series_scalar(s.table(), n, p.x0.data(), p.r.data(), p.w.data(), a1.data(), b1.data());
      simd::detail::hermite_series_avx2(s.table(), n, p.x0.data(), p.r.data(), p.w.data(), a2.data(), b2.data());
      CHECK(same_bits(a1, a2));
      CHECK(same_bits(b1, b2));
    }
  }
}

TEST_CASE("gegenbauer kernel: avx2 bitwise equal to scalar") {
  if (!simd::avx2_available()) {
    MESSAGE("avx2 not available, skipped");
    return;
  }
  for (double alpha : {0.5, 1.5, 2.0, -0.3}) {
    const auto s = ck_gegenbauer_series(3, 1, alpha, default_pk(3, 1), 25);
    const auto p = make_points(517, 0.8, 7);
    const std::size_t n = p.x0.size();
    std::vector<double> a1(n), b1(n), a2(n), b2(n);
    simd::detail::gegenbauer_series_scalar(s.table(), n, p.x0.data(), p.r.data(), p.w.data(), a1.data(), b1.data());
    simd::detail::gegenbauer_series_avx2(s.table(), n, p.x0.data(), p.r.data(), p.w.data(), a2.data(), b2.data());
    CHECK(same_bits(a1, a2));
    CHECK(same_bits(b1, b2));
  }
}

TEST_CASE("short and empty batches") {
  const auto s = ck_hermite_series(3, 0, default_pk(3, 0));
  for (std::size_t n : {0u, 1u, 3u, 4u, 5u}) {
    const auto p = make_points(n, 2.0, 3);
    std::vector<double> a1(n), b1(n), a2(n), b2(n);
    s.radial_batch(p.x0, p.r, a1, b1, simd::Isa::Scalar);
    s.radial_batch(p.x0, p.r, a2, b2);
    CHECK(same_bits(a1, a2));
    CHECK(same_bits(b1, b2));
  }
}

TEST_CASE("runtime selection") {
  ResetIsa reset;
  simd::set_isa_override(simd::Isa::Scalar);
  CHECK(simd::active_isa() == simd::Isa::Scalar);
  simd::set_isa_override(std::nullopt);
  CHECK(simd::active_isa() == (simd::avx2_available() ? simd::Isa::Avx2 : simd::Isa::Scalar));
  if (simd::avx2_available()) {
    ::setenv("CLIFFGEN_SIMD", "scalar", 1);
    CHECK(simd::active_isa() == simd::Isa::Scalar);
    simd::set_isa_override(simd::Isa::Avx2);
    CHECK(simd::active_isa() == simd::Isa::Avx2);
    ::unsetenv("CLIFFGEN_SIMD");
  } else {
    CHECK_THROWS_AS(simd::set_isa_override(simd::Isa::Avx2), PreconditionError);
  }
  CHECK(std::string(simd::isa_name(simd::Isa::Avx2)) == "avx2");
}
