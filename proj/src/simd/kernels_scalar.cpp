#include "cliffgen/simd/radial_kernels.hpp"

namespace cliffgen::simd::detail {

void hermite_series_scalar(const HermiteTable& tab, std::size_t count, const double* x0, const double* r,
                           const double* w, double* A, double* B) {
  for (std::size_t i = 0; i < count; ++i) {
    const double t = r[i] * r[i];
    double le_prev = 1, le = 1;  // L_{q-1}, L_q (even parity)
    double lo_prev = 1, lo = 1;
    double p = 1;  // x0^n
    double sa = 0, sb = 0;
    for (int n = 0; n <= tab.N; ++n) {
      const int q = n / 2;
      if (n % 2 == 0) {
        if (q == 1) {
          le_prev = 1;
          le = tab.even_l1 - t;
        } else if (q > 1) {
          const double nx = ((tab.even_c1[q - 1] - t) * le - tab.even_c2[q - 1] * le_prev) * tab.c3[q - 1];
          le_prev = le;
          le = nx;
        }
        sa = sa + (tab.scale[n] * p) * le;
      } else {
        if (q == 1) {
          lo_prev = 1;
          lo = tab.odd_l1 - t;
        } else if (q > 1) {
          const double nx = ((tab.odd_c1[q - 1] - t) * lo - tab.odd_c2[q - 1] * lo_prev) * tab.c3[q - 1];
          lo_prev = lo;
          lo = nx;
        }
        sb = sb + (tab.scale[n] * p) * lo;
      }
      p = p * x0[i];
    }
    A[i] = sa * w[i];
    B[i] = (sb * r[i]) * w[i];
  }
}

void gegenbauer_series_scalar(const GegenbauerTable& tab, std::size_t count, const double* x0, const double* r,
                              const double* w, double* A, double* B) {
  for (std::size_t i = 0; i < count; ++i) {
    const double t = r[i] * r[i];
    const double inv = 1.0 / (1.0 - t);
    const double u = -(t * inv);
    double g = 1;  // x0^n (1-t)^{q-n}
    double sa = 0, sb = 0;
    for (int n = 0; n <= tab.N; ++n) {
      if (n > 0) {
        g = g * x0[i];
        if (n % 2) g = g * inv;
      }
      const auto& c = tab.jac[n];
      double poly = c.back();
      for (std::size_t s = c.size() - 1; s-- > 0;) poly = poly * u + c[s];
      const double term = (tab.scale[n] * g) * poly;
      if (n % 2 == 0) {
        sa = sa + term;
      } else {
        sb = sb + term;
      }
    }
    A[i] = sa * w[i];
    B[i] = (sb * r[i]) * w[i];
  }
}

}  // namespace cliffgen::simd::detail
