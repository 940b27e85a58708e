#pragma once

#include <cstddef>
#include <vector>

#include "cliffgen/rational.hpp"

namespace cliffgen {

/// Dense row-major matrix over the rationals.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Rational& operator()(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

 private:
  std::size_t rows_, cols_;
  std::vector<Rational> a_;
};

struct RrefResult {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;
};

/// Gauss-Jordan elimination to reduced row echelon form (exact).
RrefResult rref(RationalMatrix a);

std::size_t rank(const RationalMatrix& a);

/// Basis of {v : A v = 0}, one vector per free column.
std::vector<std::vector<Rational>> nullspace(const RationalMatrix& a);

}  // namespace cliffgen
