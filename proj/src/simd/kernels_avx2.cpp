#include <immintrin.h>

#include "cliffgen/simd/radial_kernels.hpp"

namespace cliffgen::simd::detail {

namespace {

inline __m256d bc(double v) { return _mm256_set1_pd(v); }

}  // namespace

void hermite_series_avx2(const HermiteTable& tab, std::size_t count, const double* x0, const double* r,
                         const double* w, double* A, double* B) {
  std::size_t i = 0;
  for (; i + 4 <= count; i += 4) {
    const __m256d vx0 = _mm256_loadu_pd(x0 + i);
    const __m256d vr = _mm256_loadu_pd(r + i);
    const __m256d t = _mm256_mul_pd(vr, vr);
    const __m256d one = bc(1.0);
    __m256d le_prev = one, le = one, lo_prev = one, lo = one;
    __m256d p = one;
    __m256d sa = _mm256_setzero_pd(), sb = _mm256_setzero_pd();
    for (int n = 0; n <= tab.N; ++n) {
      const int q = n / 2;
      if (n % 2 == 0) {
        if (q == 1) {
          le_prev = one;
          le = _mm256_sub_pd(bc(tab.even_l1), t);
        } else if (q > 1) {
          __m256d nx = _mm256_mul_pd(_mm256_sub_pd(bc(tab.even_c1[q - 1]), t), le);
          nx = _mm256_sub_pd(nx, _mm256_mul_pd(bc(tab.even_c2[q - 1]), le_prev));
          nx = _mm256_mul_pd(nx, bc(tab.c3[q - 1]));
          le_prev = le;
          le = nx;
        }
        sa = _mm256_add_pd(sa, _mm256_mul_pd(_mm256_mul_pd(bc(tab.scale[n]), p), le));
      } else {
        if (q == 1) {
          lo_prev = one;
          lo = _mm256_sub_pd(bc(tab.odd_l1), t);
        } else if (q > 1) {
          __m256d nx = _mm256_mul_pd(_mm256_sub_pd(bc(tab.odd_c1[q - 1]), t), lo);
          nx = _mm256_sub_pd(nx, _mm256_mul_pd(bc(tab.odd_c2[q - 1]), lo_prev));
          nx = _mm256_mul_pd(nx, bc(tab.c3[q - 1]));
          lo_prev = lo;
          lo = nx;
        }
        sb = _mm256_add_pd(sb, _mm256_mul_pd(_mm256_mul_pd(bc(tab.scale[n]), p), lo));
      }
      p = _mm256_mul_pd(p, vx0);
    }
    const __m256d vw = _mm256_loadu_pd(w + i);
    _mm256_storeu_pd(A + i, _mm256_mul_pd(sa, vw));
    _mm256_storeu_pd(B + i, _mm256_mul_pd(_mm256_mul_pd(sb, vr), vw));
  }
  if (i < count) hermite_series_scalar(tab, count - i, x0 + i, r + i, w + i, A + i, B + i);
}

void gegenbauer_series_avx2(const GegenbauerTable& tab, std::size_t count, const double* x0, const double* r,
                            const double* w, double* A, double* B) {
  std::size_t i = 0;
  const __m256d sign = bc(-0.0);
  for (; i + 4 <= count; i += 4) {
    const __m256d vx0 = _mm256_loadu_pd(x0 + i);
    const __m256d vr = _mm256_loadu_pd(r + i);
    const __m256d t = _mm256_mul_pd(vr, vr);
    const __m256d inv = _mm256_div_pd(bc(1.0), _mm256_sub_pd(bc(1.0), t));
    const __m256d u = _mm256_xor_pd(_mm256_mul_pd(t, inv), sign);
    __m256d g = bc(1.0);
    __m256d sa = _mm256_setzero_pd(), sb = _mm256_setzero_pd();
    for (int n = 0; n <= tab.N; ++n) {
      if (n > 0) {
        g = _mm256_mul_pd(g, vx0);
        if (n % 2) g = _mm256_mul_pd(g, inv);
      }
      const auto& c = tab.jac[n];
      __m256d poly = bc(c.back());
      for (std::size_t s = c.size() - 1; s-- > 0;) poly = _mm256_add_pd(_mm256_mul_pd(poly, u), bc(c[s]));
      const __m256d term = _mm256_mul_pd(_mm256_mul_pd(bc(tab.scale[n]), g), poly);
      if (n % 2 == 0) {
        sa = _mm256_add_pd(sa, term);
      } else {
        sb = _mm256_add_pd(sb, term);
      }
    }
    const __m256d vw = _mm256_loadu_pd(w + i);
    _mm256_storeu_pd(A + i, _mm256_mul_pd(sa, vw));
    _mm256_storeu_pd(B + i, _mm256_mul_pd(_mm256_mul_pd(sb, vr), vw));
  }
  if (i < count) gegenbauer_series_scalar(tab, count - i, x0 + i, r + i, w + i, A + i, B + i);
}

}  // namespace cliffgen::simd::detail
