#include "fermatk3/cyc_linalg.hpp"

#include "fermatk3/error.hpp"

namespace fermatk3 {

CycTable rref(CycTable m, std::vector<std::size_t>* pivot_cols) {
  if (pivot_cols) pivot_cols->clear();
  if (m.empty()) return m;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && m[p][c].is_zero()) ++p;
    if (p == rows) continue;
    std::swap(m[p], m[r]);
    CycNumber piv = m[r][c].inv();
    for (std::size_t j = c; j < cols; ++j) m[r][j] = m[r][j] * piv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      CycNumber f = m[i][c];
      for (std::size_t j = c; j < cols; ++j) m[i][j] = m[i][j] - f * m[r][j];
    }
    if (pivot_cols) pivot_cols->push_back(c);
    ++r;
  }
  m.resize(r, CycRow(cols, CycNumber(0)));
  return m;
}

std::vector<CycRow> kernel_basis(const CycTable& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  CycTable e = rref(m, &pivots);
  std::vector<bool> is_pivot(ncols, false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<CycRow> basis;
  for (std::size_t f = 0; f < ncols; ++f) {
    if (is_pivot[f]) continue;
    CycRow v(ncols, CycNumber(0));
    v[f] = CycNumber(1);
    for (std::size_t i = 0; i < pivots.size(); ++i)
      v[pivots[i]] = -e[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

CycNumber determinant(CycTable m) {
  const std::size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw ShapeError("determinant needs a square matrix");
  CycNumber det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && m[p][c].is_zero()) ++p;
    if (p == n) return CycNumber(0);
    if (p != c) {
      std::swap(m[p], m[c]);
      det = -det;
    }
    det = det * m[c][c];
    CycNumber piv = m[c][c].inv();
    for (std::size_t i = c + 1; i < n; ++i) {
      if (m[i][c].is_zero()) continue;
      CycNumber f = m[i][c] * piv;
      for (std::size_t j = c; j < n; ++j) m[i][j] = m[i][j] - f * m[c][j];
    }
  }
  return det;
}

CycTable cyc_identity(std::size_t n) {
  CycTable m(n, CycRow(n, CycNumber(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = CycNumber(1);
  return m;
}

CycTable cyc_inverse(CycTable m) {
  const std::size_t n = m.size();
  CycTable aug = std::move(m);
  for (std::size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw ShapeError("inverse needs a square matrix");
    for (std::size_t j = 0; j < n; ++j)
      aug[i].push_back(i == j ? CycNumber(1) : CycNumber(0));
  }
  std::vector<std::size_t> pivots;
  aug = rref(std::move(aug), &pivots);
  if (pivots.size() != n || pivots.back() != n - 1) throw DivisionByZero();
  CycTable inv(n, CycRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

}  // namespace fermatk3
