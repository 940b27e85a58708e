#include <atomic>
#include <cstdlib>
#include <cstring>

#include "cliffgen/error.hpp"
#include "cliffgen/simd/radial_kernels.hpp"

namespace cliffgen::simd {

namespace {

// -1 automatic, otherwise an Isa value
std::atomic<int> g_override{-1};

}  // namespace

const char* isa_name(Isa isa) { return isa == Isa::Avx2 ? "avx2" : "scalar"; }

bool avx2_available() {
#if defined(CLIFFGEN_BUILD_AVX2) && (defined(__x86_64__) || defined(__i386__))
  static const bool ok = __builtin_cpu_supports("avx2");
  return ok;
#else
  return false;
#endif
}

void set_isa_override(std::optional<Isa> isa) {
  if (isa && *isa == Isa::Avx2 && !avx2_available()) throw PreconditionError("avx2 kernels not available");
  g_override = isa ? static_cast<int>(*isa) : -1;
}

Isa active_isa() {
  const int o = g_override.load();
  if (o >= 0) return static_cast<Isa>(o);
  if (const char* env = std::getenv("CLIFFGEN_SIMD")) {
    if (std::strcmp(env, "scalar") == 0) return Isa::Scalar;
  }
  return avx2_available() ? Isa::Avx2 : Isa::Scalar;
}

namespace {

Isa resolve(std::optional<Isa> isa) {
  const Isa chosen = isa.value_or(active_isa());
  if (chosen == Isa::Avx2 && !avx2_available()) throw PreconditionError("avx2 kernels not available");
  return chosen;
}

}  // namespace

void hermite_series(const HermiteTable& tab, std::size_t count, const double* x0, const double* r, const double* w,
                    double* A, double* B, std::optional<Isa> isa) {
#if defined(CLIFFGEN_BUILD_AVX2)
  if (resolve(isa) == Isa::Avx2) return detail::hermite_series_avx2(tab, count, x0, r, w, A, B);
#else
  resolve(isa);
#endif
  detail::hermite_series_scalar(tab, count, x0, r, w, A, B);
}

void gegenbauer_series(const GegenbauerTable& tab, std::size_t count, const double* x0, const double* r,
                       const double* w, double* A, double* B, std::optional<Isa> isa) {
#if defined(CLIFFGEN_BUILD_AVX2)
  if (resolve(isa) == Isa::Avx2) return detail::gegenbauer_series_avx2(tab, count, x0, r, w, A, B);
#else
  resolve(isa);
#endif
  detail::gegenbauer_series_scalar(tab, count, x0, r, w, A, B);
}

}  // namespace cliffgen::simd
