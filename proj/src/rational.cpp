#include "cliffgen/rational.hpp"

#include <cmath>
#include <cstdint>

namespace cliffgen {

namespace {

// Top 64 bits of |z| as a long double, times 2^shift.
long double mpz_to_long_double(const Integer& z, long& shift) {
  const std::size_t bits = mpz_sizeinbase(z.get_mpz_t(), 2);
  Integer mag = abs(z);
  shift = 0;
  if (bits > 64) {
    shift = static_cast<long>(bits - 64);
    mpz_fdiv_q_2exp(mag.get_mpz_t(), mag.get_mpz_t(), static_cast<mp_bitcnt_t>(shift));
  }
  std::uint64_t word = 0;
  std::size_t count = 0;
  mpz_export(&word, &count, -1, sizeof(word), 0, 0, mag.get_mpz_t());
  const long double v = static_cast<long double>(word);
  return sgn(z) < 0 ? -v : v;
}

}  // namespace

Rational rational(long num, long den) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

long double to_long_double(const Rational& q) {
  if (sgn(q) == 0) return 0.0L;
  const Integer& num = q.get_num();
  const Integer& den = q.get_den();
  // Scale so the integer quotient carries at least 66 significant bits.
  const long nb = static_cast<long>(mpz_sizeinbase(num.get_mpz_t(), 2));
  const long db = static_cast<long>(mpz_sizeinbase(den.get_mpz_t(), 2));
  const long s = 66 + db - nb;
  Integer scaled = num;
  if (s > 0) {
    mpz_mul_2exp(scaled.get_mpz_t(), scaled.get_mpz_t(), static_cast<mp_bitcnt_t>(s));
  }
  Integer quotient;
  mpz_tdiv_q(quotient.get_mpz_t(), scaled.get_mpz_t(), den.get_mpz_t());
  long shift = 0;
  const long double mant = mpz_to_long_double(quotient, shift);
  return std::ldexp(mant, static_cast<int>(shift - (s > 0 ? s : 0)));
}

double to_double(const Rational& q) { return static_cast<double>(to_long_double(q)); }

std::string to_string(const Rational& q) { return q.get_str(); }

bool is_integer(const Rational& q) { return q.get_den() == 1; }

}  // namespace cliffgen
