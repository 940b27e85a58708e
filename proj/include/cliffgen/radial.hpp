#pragma once

// The radial operators D_r(n) = (r^-1 d/dr)^n and D^r(n) = (d/dr r^-1)^n,
// by direct composition and by the coefficient sums
//   D_r(n)[u] = sum_{j=1..n} a_{j,n} r^{j-2n} d^j u / dr^j
//   D^r(n)[v] = sum_{j=0..n} b_{j,n} r^{j-2n} d^j v / dr^j.

#include <map>

#include "cliffgen/expr.hpp"
#include "cliffgen/rational.hpp"

namespace cliffgen {

/// a_{j,n} = (-1)^{n+j} (2n-j-1)! / (2^{n-j} (n-j)! (j-1)!), 1 <= j <= n.
Rational a_coeff(int j, int n);
/// b_{j,n} = a_{j+1,n+1}, 0 <= j <= n.
Rational b_coeff(int j, int n);

struct RadialCoeffTable {
  int n = 0;
  std::map<int, Rational> entries;
};

/// Row n of the a-table built from the three-term recursion only.
RadialCoeffTable a_table_recursive(int n);
/// Same value as a_coeff, read off a_table_recursive.
Rational a_coeff_recursive(int j, int n);
/// Row n of the b-table from the closed form.
RadialCoeffTable b_table(int n);

namespace radial {

using expr::Expression;

Expression D_r_compose(int n, const Expression& u);
Expression D_r_upper_compose(int n, const Expression& v);
Expression D_r_closed(int n, const Expression& u);
Expression D_r_upper_closed(int n, const Expression& v);

/// sum_j C(n,j) D_r(n-j)[f] D_r(j)[g]
Expression leibniz_D_r(int n, const Expression& f, const Expression& g);
/// sum_j C(n,j) D_r(n-j)[f] D^r(j)[g]
Expression leibniz_D_r_upper(int n, const Expression& f, const Expression& g);

}  // namespace radial

}  // namespace cliffgen
