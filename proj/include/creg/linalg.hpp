#pragma once

#include <vector>

#include "creg/scalar.hpp"

namespace creg {

/// Dense matrix over the coefficient field, for graded-piece and
/// projective-linear computations.
struct DenseMat {
  int rows = 0, cols = 0;
  FieldSpec field;
  std::vector<Scalar> a;

  DenseMat() = default;
  DenseMat(int r, int c, FieldSpec f) : rows(r), cols(c), field(f), a(r * c, Scalar::zero(f)) {}
  Scalar& at(int r, int c) { return a[r * cols + c]; }
  const Scalar& at(int r, int c) const { return a[r * cols + c]; }
};

/// In-place reduced row echelon form; returns pivot column indices.
std::vector<int> rref(DenseMat& m);

int rank(DenseMat m);

/// Basis of the right kernel {v : M v = 0}, one vector per non-pivot column.
std::vector<std::vector<Scalar>> kernel_basis(DenseMat m);

}  // namespace creg
