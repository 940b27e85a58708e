#pragma once

#include <gmpxx.h>

#include <string>

namespace cliffgen {

/// Exact arbitrary-precision rational. All symbolic paths use this type.
using Rational = mpq_class;
using Integer = mpz_class;

Rational rational(long num, long den = 1);

/// Nearest long double (64-bit mantissa); mpq_get_d would truncate to double.
long double to_long_double(const Rational& q);
double to_double(const Rational& q);

std::string to_string(const Rational& q);

bool is_integer(const Rational& q);

}  // namespace cliffgen
