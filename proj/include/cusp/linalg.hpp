#pragma once

#include <vector>

#include "cusp/scalar.hpp"

namespace cusp {

class ScalarMatrix {
 public:
  ScalarMatrix(size_t rows, size_t cols) : rows_(rows), cols_(cols), a_(rows * cols, Scalar(0)) {}

  Scalar& at(size_t i, size_t j) { return a_[i * cols_ + j]; }
  const Scalar& at(size_t i, size_t j) const { return a_[i * cols_ + j]; }
  size_t rows() const { return rows_; }
  size_t cols() const { return cols_; }

 private:
  size_t rows_, cols_;
  std::vector<Scalar> a_;
};

// Rank by fraction-free (Bareiss) elimination; deterministic pivoting.
int ff_rank(ScalarMatrix m);

// Canonical kernel basis: one vector per free column in increasing order,
// with the free coordinate set to 1. Derived from the reduced echelon form.
std::vector<std::vector<Scalar>> kernel_basis(ScalarMatrix m);

}  // namespace cusp
