#include "hitchin/linalg.hpp"

#include <algorithm>

namespace hitchin {

int row_reduce(Matrix& m) {
  if (m.empty()) return 0;
  int rows = static_cast<int>(m.size());
  int cols = static_cast<int>(m[0].size());
  int r = 0;
  for (int c = 0; c < cols && r < rows; ++c) {
    int piv = -1;
    for (int i = r; i < rows; ++i)
      if (!m[i][c].is_zero()) { piv = i; break; }
    if (piv < 0) continue;
    std::swap(m[r], m[piv]);
    Fq inv = m[r][c].inv();
    for (int j = c; j < cols; ++j) m[r][j] = m[r][j] * inv;
    for (int i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Fq f = m[i][c];
      for (int j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    ++r;
  }
  return r;
}

int rank(Matrix m) { return row_reduce(m); }

std::vector<Row> kernel_basis(Matrix m, int ncols, const FieldCtx& F) {
  int rk = row_reduce(m);
  // locate pivot columns
  std::vector<int> pivot_of_row(rk, -1);
  std::vector<bool> is_pivot(ncols, false);
  for (int i = 0; i < rk; ++i) {
    for (int j = 0; j < ncols; ++j) {
      if (!m[i][j].is_zero()) {
        pivot_of_row[i] = j;
        is_pivot[j] = true;
        break;
      }
    }
  }
  std::vector<Row> basis;
  for (int free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Row v(ncols, Fq::zero(F));
    v[free] = Fq::one(F);
    for (int i = 0; i < rk; ++i)
      v[pivot_of_row[i]] = -m[i][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hitchin
