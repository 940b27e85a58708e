#pragma once

// Batched evaluation of the radial parts of the truncated Hermite and
// Gegenbauer CK series, f = (A + w B) P_k. The transcendental weights
// (exp(-r^2), (1-r^2)^alpha) are computed by the caller; the kernels are pure
// arithmetic over coefficient tables shared by all points.
//
// The AVX2 variant performs the same IEEE operations in the same order as the
// scalar reference (no FMA contraction), so both produce identical bits.

#include <cstddef>
#include <optional>
#include <vector>

namespace cliffgen::simd {

enum class Isa { Scalar, Avx2 };

const char* isa_name(Isa isa);
/// Compiled in and supported by this CPU.
bool avx2_available();
/// Override wins, then CLIFFGEN_SIMD=scalar|avx2, then the best available.
Isa active_isa();
/// Process-wide override; std::nullopt restores automatic selection.
void set_isa_override(std::optional<Isa> isa);

/// Laguerre three-term recurrences for both parities:
///   L_{q+1} = ((c1[q] - t) L_q - c2[q] L_{q-1}) * c3[q].
struct HermiteTable {
  int N = 0;
  std::vector<double> scale;  // 2^n floor(n/2)! / n!
  double even_l1 = 0;         // L_1 = even_l1 - t, i.e. alpha + 1
  double odd_l1 = 0;
  std::vector<double> even_c1, even_c2, odd_c1, odd_c2, c3;
};

/// Jacobi values through the binomial sum in u = -t/(1-t):
///   P_q(1-2t) = (1-t)^q sum_s jac[n][s] u^s.
struct GegenbauerTable {
  int N = 0;
  std::vector<double> scale;             // 2^n q! (pochhammer) / n!
  std::vector<std::vector<double>> jac;  // jac[n][s], s = 0..floor(n/2)
};

// A[i] = w[i] * sum_{n even}..., B[i] = (r[i] * sum_{n odd}...) * w[i]
void hermite_series(const HermiteTable& tab, std::size_t count, const double* x0, const double* r, const double* w,
                    double* A, double* B, std::optional<Isa> isa = std::nullopt);
void gegenbauer_series(const GegenbauerTable& tab, std::size_t count, const double* x0, const double* r,
                       const double* w, double* A, double* B, std::optional<Isa> isa = std::nullopt);

namespace detail {
void hermite_series_scalar(const HermiteTable&, std::size_t, const double*, const double*, const double*, double*,
                           double*);
void gegenbauer_series_scalar(const GegenbauerTable&, std::size_t, const double*, const double*, const double*,
                              double*, double*);
void hermite_series_avx2(const HermiteTable&, std::size_t, const double*, const double*, const double*, double*,
                         double*);
void gegenbauer_series_avx2(const GegenbauerTable&, std::size_t, const double*, const double*, const double*,
                            double*, double*);
}  // namespace detail

}  // namespace cliffgen::simd
