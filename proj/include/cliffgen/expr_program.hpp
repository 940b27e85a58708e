#pragma once

// Flattened, deduplicated form of an Expression for repeated evaluation on
// grids. Shared subtrees (common after repeated differentiation) are computed
// once per point.

#include <complex>
#include <cstdint>
#include <vector>

#include "cliffgen/expr.hpp"

namespace cliffgen::expr {

class Program {
 public:
  explicit Program(const Expression& e);

  template <class T>
  std::complex<T> operator()(T x0_value, T r_value) const;

  /// Same, reusing a caller-owned register file.
  template <class T>
  std::complex<T> run(T x0_value, T r_value, std::vector<std::complex<T>>& regs) const;

  std::size_t size() const { return code_.size(); }

 private:
  struct Instr {
    Kind kind;
    Complex value;
    Var var;
    long double exponent;
    std::vector<std::uint32_t> operands;
  };
  std::vector<Instr> code_;
};

extern template std::complex<double> Program::operator()<double>(double, double) const;
extern template std::complex<long double> Program::operator()<long double>(long double, long double) const;

}  // namespace cliffgen::expr
