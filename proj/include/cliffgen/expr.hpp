#pragma once

// Immutable expression trees over the two radial variables x0 and r with
// complex constants. Only local simplifications are applied on construction
// (constant folding, flattening, like-term and like-base merging); equality
// of two expressions is otherwise established by evaluation.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "cliffgen/error.hpp"

namespace cliffgen::expr {

using Complex = std::complex<long double>;

enum class Var : std::uint8_t { X0, R };

enum class Kind : std::uint8_t { Const, Variable, Sum, Product, Power, Exp, Cos, Sin, Neg };

struct Node;

class Expression {
 public:
  /// The constant 0.
  Expression();
  explicit Expression(std::shared_ptr<const Node> node) : n_(std::move(node)) {}

  Kind kind() const;
  const Complex& value() const;
  Var var() const;
  long double exponent() const;
  std::span<const Expression> args() const;
  std::size_t hash() const;

  bool is_constant() const { return kind() == Kind::Const; }
  bool is_zero() const;
  bool is_one() const;
  /// True when the tree contains no complex constants with non-zero imaginary part.
  bool is_real() const;

  const Node* node() const { return n_.get(); }

  /// Structural equality.
  friend bool operator==(const Expression& a, const Expression& b);

  /// DSL text that parses back to an equivalent expression.
  std::string to_string() const;

 private:
  std::shared_ptr<const Node> n_;
};

struct Node {
  Kind kind = Kind::Const;
  Complex value{0, 0};
  Var var = Var::X0;
  long double exponent = 0;
  std::vector<Expression> args;
  std::size_t hash = 0;
};

Expression constant(Complex c);
inline Expression constant(long double re, long double im = 0) { return constant(Complex(re, im)); }
Expression variable(Var v);
Expression x0();
Expression r();
Expression imag_unit();
/// Z = x0 + i r.
Expression z();
/// conj(Z) = x0 - i r.
Expression z_conj();

Expression sum(std::vector<Expression> terms);
Expression product(std::vector<Expression> factors);
Expression pow(const Expression& base, long double exponent);
Expression exp(const Expression& a);
Expression cos(const Expression& a);
Expression sin(const Expression& a);

Expression operator+(const Expression& a, const Expression& b);
Expression operator-(const Expression& a, const Expression& b);
Expression operator-(const Expression& a);
Expression operator*(const Expression& a, const Expression& b);
Expression operator*(long double s, const Expression& a);
Expression operator*(Complex s, const Expression& a);

/// Symbolic partial derivative.
Expression diff(const Expression& e, Var v);
Expression diff(const Expression& e, Var v, int order);

std::size_t node_count(const Expression& e);

/// Complex value at real (x0, r). Throws PoleError / BranchCutError instead of
/// returning inf/nan for zero bases under negative powers or non-integer
/// powers of negative reals.
template <class T>
std::complex<T> evaluate(const Expression& e, T x0_value, T r_value);

extern template std::complex<double> evaluate<double>(const Expression&, double, double);
extern template std::complex<long double> evaluate<long double>(const Expression&, long double,
                                                                long double);

inline std::complex<double> eval(const Expression& e, double x0_value, double r_value) {
  return evaluate<double>(e, x0_value, r_value);
}

}  // namespace cliffgen::expr
