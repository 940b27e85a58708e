#include "cliffgen/classical.hpp"

namespace cliffgen {

Integer binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer out;
  mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return out;
}

std::vector<Rational> bessel_poly_coeffs(int n) {
  if (n < 0) throw PreconditionError("bessel polynomial degree must be >= 0");
  std::vector<Rational> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  for (int j = 0; j <= n; ++j) {
    Rational c = factorial<Rational>(n + j) /
                 (factorial<Rational>(n - j) * factorial<Rational>(j));
    Integer pow2;
    mpz_ui_pow_ui(pow2.get_mpz_t(), 2, static_cast<unsigned long>(j));
    c /= Rational(pow2);
    out.push_back(c);
  }
  return out;
}

}  // namespace cliffgen
