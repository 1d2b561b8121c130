#include "cusp/linalg.hpp"

#include <utility>

namespace cusp {

namespace {

// Forward fraction-free elimination (Bareiss). Returns pivot (row, col)
// positions; m is left upper-triangular on the pivot columns. The Sylvester
// identity keeps every division exact over an integral domain; over our
// field scalars exactness is automatic and the point is growth control.
std::vector<std::pair<size_t, size_t>> bareiss(ScalarMatrix& m) {
  std::vector<std::pair<size_t, size_t>> pivots;
  Scalar prev(1);
  size_t row = 0;
  for (size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    size_t piv = row;
    while (piv < m.rows() && m.at(piv, col).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != row) {
      for (size_t j = 0; j < m.cols(); ++j) std::swap(m.at(piv, j), m.at(row, j));
    }
    for (size_t i = row + 1; i < m.rows(); ++i) {
      for (size_t j = col + 1; j < m.cols(); ++j) {
        m.at(i, j) = (m.at(row, col) * m.at(i, j) - m.at(i, col) * m.at(row, j)) / prev;
      }
      m.at(i, col) = Scalar(0);
    }
    prev = m.at(row, col);
    pivots.emplace_back(row, col);
    ++row;
  }
  return pivots;
}

}  // namespace

int ff_rank(ScalarMatrix m) { return static_cast<int>(bareiss(m).size()); }

std::vector<std::vector<Scalar>> kernel_basis(ScalarMatrix m) {
  auto pivots = bareiss(m);
  // normalize pivot rows and clear above the pivots (exact field steps)
  for (auto it = pivots.rbegin(); it != pivots.rend(); ++it) {
    auto [r, c] = *it;
    Scalar p = m.at(r, c);
    for (size_t j = c; j < m.cols(); ++j) m.at(r, j) /= p;
    for (size_t i = 0; i < r; ++i) {
      Scalar f = m.at(i, c);
      if (f.is_zero()) continue;
      for (size_t j = c; j < m.cols(); ++j) m.at(i, j) -= f * m.at(r, j);
    }
  }
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto [r, c] : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols(), Scalar(0));
    v[free] = Scalar(1);
    for (auto [r, c] : pivots) {
      v[c] = -m.at(r, free);
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace cusp
