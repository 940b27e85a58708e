#include "cliffgen/radial.hpp"

#include <vector>

#include "cliffgen/classical.hpp"

namespace cliffgen {

Rational a_coeff(int j, int n) {
  if (n < 1 || j < 1 || j > n) throw PreconditionError("a_coeff needs 1 <= j <= n");
  Rational v(factorial<Integer>(2 * n - j - 1),
             factorial<Integer>(n - j) * factorial<Integer>(j - 1) * (Integer(1) << (n - j)));
  v.canonicalize();
  return ((n + j) % 2) ? Rational(-v) : v;
}

Rational b_coeff(int j, int n) {
  if (n < 0 || j < 0 || j > n) throw PreconditionError("b_coeff needs 0 <= j <= n");
  return a_coeff(j + 1, n + 1);
}

RadialCoeffTable a_table_recursive(int n) {
  if (n < 1) throw PreconditionError("a table needs n >= 1");
  std::vector<Rational> row{Rational(0), Rational(1)};  // 1-based, n = 1
  for (int cur = 1; cur < n; ++cur) {
    std::vector<Rational> next(cur + 2);
    next[1] = Rational(-(2 * cur - 1)) * row[1];
    for (int j = 2; j <= cur; ++j) next[j] = row[j - 1] - Rational(2 * cur - j) * row[j];
    next[cur + 1] = 1;
    row = std::move(next);
  }
  RadialCoeffTable t;
  t.n = n;
  for (int j = 1; j <= n; ++j) t.entries.emplace(j, row[j]);
  return t;
}

Rational a_coeff_recursive(int j, int n) {
  if (n < 1 || j < 1 || j > n) throw PreconditionError("a_coeff needs 1 <= j <= n");
  return a_table_recursive(n).entries.at(j);
}

RadialCoeffTable b_table(int n) {
  RadialCoeffTable t;
  t.n = n;
  for (int j = 0; j <= n; ++j) t.entries.emplace(j, b_coeff(j, n));
  return t;
}

namespace radial {

using expr::Var;

namespace {

void check_order(int n) {
  if (n < 0) throw PreconditionError("radial operator order must be >= 0");
}

Expression coeff_sum(int n, const Expression& u, bool upper) {
  // sum over j of c_j r^{j-2n} d^j u
  std::vector<Expression> terms;
  Expression d = u;
  for (int j = 0; j <= n; ++j) {
    if (j > 0) d = expr::diff(d, Var::R);
    if (!upper && j == 0) continue;
    const Rational c = upper ? b_coeff(j, n) : a_coeff(j, n);
    terms.push_back(expr::product(
        {expr::constant(to_long_double(c)), expr::pow(expr::r(), static_cast<long double>(j - 2 * n)), d}));
  }
  return expr::sum(std::move(terms));
}

}  // namespace

Expression D_r_compose(int n, const Expression& u) {
  check_order(n);
  Expression out = u;
  const Expression inv_r = expr::pow(expr::r(), -1);
  for (int i = 0; i < n; ++i) out = inv_r * expr::diff(out, Var::R);
  return out;
}

Expression D_r_upper_compose(int n, const Expression& v) {
  check_order(n);
  Expression out = v;
  const Expression inv_r = expr::pow(expr::r(), -1);
  for (int i = 0; i < n; ++i) out = expr::diff(inv_r * out, Var::R);
  return out;
}

Expression D_r_closed(int n, const Expression& u) {
  check_order(n);
  if (n == 0) return u;
  return coeff_sum(n, u, false);
}

Expression D_r_upper_closed(int n, const Expression& v) {
  check_order(n);
  if (n == 0) return v;
  return coeff_sum(n, v, true);
}

Expression leibniz_D_r(int n, const Expression& f, const Expression& g) {
  check_order(n);
  std::vector<Expression> terms;
  for (int j = 0; j <= n; ++j) {
    const long double c = to_long_double(Rational(binomial(n, j)));
    terms.push_back(expr::product({expr::constant(c), D_r_closed(n - j, f), D_r_closed(j, g)}));
  }
  return expr::sum(std::move(terms));
}

Expression leibniz_D_r_upper(int n, const Expression& f, const Expression& g) {
  check_order(n);
  std::vector<Expression> terms;
  for (int j = 0; j <= n; ++j) {
    const long double c = to_long_double(Rational(binomial(n, j)));
    terms.push_back(expr::product({expr::constant(c), D_r_closed(n - j, f), D_r_upper_closed(j, g)}));
  }
  return expr::sum(std::move(terms));
}

}  // namespace radial

}  // namespace cliffgen
