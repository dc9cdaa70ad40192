#pragma once

#include <vector>

#include "specalc/rational.hpp"

namespace specalc {

// Dense rational matrix, row major. Ambient dimensions stay small (path
// counts of finite acyclic quivers), so no sparse machinery.
struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rational> entries;  // rows * cols cells

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), entries(static_cast<size_t>(r) * c) {}

  Rational& at(int r, int c) { return entries[static_cast<size_t>(r) * cols + c]; }
  const Rational& at(int r, int c) const { return entries[static_cast<size_t>(r) * cols + c]; }

  static RatMatrix identity(int n);

  bool operator==(const RatMatrix& o) const {
    return rows == o.rows && cols == o.cols && entries == o.entries;
  }
};

// Reduced row-echelon form with zero rows removed; pivots strictly increase
// and pivot entries are 1. Row space is preserved.
RatMatrix rref(const RatMatrix& m);

int rank(const RatMatrix& m);

RatMatrix mat_mul(const RatMatrix& a, const RatMatrix& b);

// Vertical stack; both must have the same column count.
RatMatrix mat_stack(const RatMatrix& a, const RatMatrix& b);

// Rows form a basis of { x : m x = 0 } (right kernel), in RREF.
RatMatrix kernel_basis(const RatMatrix& m);

std::vector<Rational> mat_apply(const RatMatrix& m, const std::vector<Rational>& v);

}  // namespace specalc
