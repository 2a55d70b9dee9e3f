#include "creg/linalg.hpp"

namespace creg {

std::vector<int> rref(DenseMat& m) {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < m.cols && r < m.rows; ++c) {
    int pr = -1;
    for (int i = r; i < m.rows; ++i)
      if (!m.at(i, c).is_zero()) {
        pr = i;
        break;
      }
    if (pr < 0) continue;
    if (pr != r)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pr, j), m.at(r, j));
    Scalar inv = m.at(r, c).inv();
    for (int j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * inv;
    for (int i = 0; i < m.rows; ++i) {
      if (i == r || m.at(i, c).is_zero()) continue;
      Scalar f = m.at(i, c);
      for (int j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int rank(DenseMat m) { return static_cast<int>(rref(m).size()); }

std::vector<std::vector<Scalar>> kernel_basis(DenseMat m) {
  std::vector<int> pivots = rref(m);
  std::vector<bool> is_pivot(m.cols, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Scalar>> basis;
  for (int free = 0; free < m.cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Scalar> v(m.cols, Scalar::zero(m.field));
    v[free] = Scalar::one(m.field);
    for (size_t k = 0; k < pivots.size(); ++k) v[pivots[k]] = -m.at(static_cast<int>(k), free);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace creg
