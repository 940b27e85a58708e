#pragma once

// One-variable orthogonal polynomials and combinatorial scalars.
//
// Every routine is a template over the parameter type S (Rational for exact
// work, double / long double for numerics). Value evaluators take a separate
// argument type A so the same recurrence serves reals, complex points and
// symbolic UniPoly arguments.

#include <cmath>
#include <cstdlib>
#include <type_traits>
#include <vector>

#include "cliffgen/error.hpp"
#include "cliffgen/rational.hpp"
#include "cliffgen/unipoly.hpp"

namespace cliffgen {

template <class S>
S factorial(int n) {
  if (n < 0) throw PreconditionError("factorial of a negative integer");
  S out(1);
  for (int j = 2; j <= n; ++j) out *= S(j);
  return out;
}

/// n!! for n >= -1, with (-1)!! = 0!! = 1.
template <class S>
S double_factorial(int n) {
  if (n < -1) throw PreconditionError("double factorial needs n >= -1");
  S out(1);
  for (int j = n; j > 1; j -= 2) out *= S(j);
  return out;
}

/// Rising factorial (a)_n = a(a+1)...(a+n-1).
template <class S>
S pochhammer(const S& a, int n) {
  if (n < 0) throw PreconditionError("pochhammer needs n >= 0");
  S out(1);
  for (int j = 0; j < n; ++j) out *= a + S(j);
  return out;
}

/// binom(alpha, n) = (1/n!) prod_{j<n} (alpha - j), any real alpha.
template <class S>
S gen_binomial(const S& alpha, int n) {
  if (n < 0) return S(0);
  S out(1);
  for (int j = 0; j < n; ++j) {
    out *= alpha - S(j);
    out /= S(j + 1);
  }
  return out;
}

/// Ordinary binomial coefficient for integers 0 <= k <= n (0 outside that range).
Integer binomial(int n, int k);

/// Coefficients of the Bessel polynomial y_n(x) = sum_j (n+j)!/((n-j)! j! 2^j) x^j.
std::vector<Rational> bessel_poly_coeffs(int n);

namespace detail {

template <class S>
bool near_zero(const S& v) {
  if constexpr (std::is_same_v<S, Rational>) {
    return sgn(v) == 0;
  } else {
    using std::abs;
    return abs(v) < S(1e-12);
  }
}

}  // namespace detail

/// Generalized Laguerre L_n^{(alpha)}(t) by the three-term recurrence.
template <class S, class A>
A laguerre(int n, const S& alpha, const A& t) {
  if (n < 0) throw PreconditionError("laguerre degree must be >= 0");
  A prev = A(S(1));
  if (n == 0) return prev;
  A cur = A(alpha + S(1)) - t;
  for (int j = 1; j < n; ++j) {
    A next = (A(S(2 * j + 1) + alpha) - t) * cur - A(S(j) + alpha) * prev;
    next = next * A(S(1) / S(j + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template <class S>
UniPoly<S> laguerre_poly(int n, const S& alpha) {
  return laguerre(n, alpha, UniPoly<S>::identity());
}

/// Jacobi P_n^{(a,b)}(t) from the explicit binomial sum; valid for every real a, b.
template <class S, class A>
A jacobi_binomial_sum(int n, const S& a, const S& b, const A& t) {
  const A half = A(S(1) / S(2));
  const A lo = (t - A(S(1))) * half;  // (t-1)/2
  const A hi = (t + A(S(1))) * half;  // (t+1)/2
  A out = A(S(0));
  for (int s = 0; s <= n; ++s) {
    A term = A(gen_binomial<S>(S(n) + a, n - s) * gen_binomial<S>(S(n) + b, s));
    for (int i = 0; i < s; ++i) term = term * lo;
    for (int i = 0; i < n - s; ++i) term = term * hi;
    out = out + term;
  }
  return out;
}

/// Jacobi P_n^{(a,b)}(t). Uses the standard three-term recurrence and falls
/// back to the binomial sum when a recurrence denominator vanishes (this
/// happens for the negative second parameters in the Gegenbauer series).
template <class S, class A>
A jacobi(int n, const S& a, const S& b, const A& t) {
  if (n < 0) throw PreconditionError("jacobi degree must be >= 0");
  A prev = A(S(1));
  if (n == 0) return prev;
  const S ab = a + b;
  A cur = A(a + S(1)) + A((ab + S(2)) / S(2)) * (t - A(S(1)));
  for (int j = 1; j < n; ++j) {
    const S c = S(2 * j) + ab;
    const S a1 = S(2 * (j + 1)) * (S(j + 1) + ab) * c;
    if (detail::near_zero(c) || detail::near_zero(a1)) return jacobi_binomial_sum(n, a, b, t);
    const S a2 = (c + S(1)) * (a * a - b * b);
    const S a3 = c * (c + S(1)) * (c + S(2));
    const S a4 = S(2) * (S(j) + a) * (S(j) + b) * (c + S(2));
    A next = (A(a2) + A(a3) * t) * cur - A(a4) * prev;
    next = next * A(S(1) / a1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template <class S>
UniPoly<S> jacobi_poly(int n, const S& a, const S& b) {
  return jacobi(n, a, b, UniPoly<S>::identity());
}

/// Gegenbauer C_n^{(lambda)}(t) by recurrence.
template <class S, class A>
A gegenbauer_1d(int n, const S& lambda, const A& t) {
  if (n < 0) throw PreconditionError("gegenbauer degree must be >= 0");
  A prev = A(S(1));
  if (n == 0) return prev;
  A cur = A(S(2) * lambda) * t;
  for (int j = 1; j < n; ++j) {
    A next = A(S(2) * (S(j) + lambda)) * t * cur - A(S(j - 1) + S(2) * lambda) * prev;
    next = next * A(S(1) / S(j + 1));
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

template <class S>
UniPoly<S> gegenbauer_poly(int n, const S& lambda) {
  return gegenbauer_1d(n, lambda, UniPoly<S>::identity());
}

}  // namespace cliffgen
