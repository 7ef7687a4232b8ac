#ifndef NAPP_LINALG_HPP
#define NAPP_LINALG_HPP

#include <vector>

#include "napp/field.hpp"

namespace napp {

using Matrix = std::vector<std::vector<FieldElement>>;

// Row-reduces in place and returns the rank. Exact arithmetic, any field.
inline std::size_t row_reduce(Matrix& m) {
  if (m.empty()) return 0;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && m[pivot][col].is_zero()) ++pivot;
    if (pivot == rows) continue;
    std::swap(m[rank], m[pivot]);
    FieldElement inv = m[rank][col].inverse();
    for (std::size_t j = col; j < cols; ++j) m[rank][j] = m[rank][j] * inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == rank || m[i][col].is_zero()) continue;
      FieldElement factor = m[i][col];
      for (std::size_t j = col; j < cols; ++j)
        m[i][j] = m[i][j] - factor * m[rank][j];
    }
    ++rank;
  }
  return rank;
}

inline std::size_t rank(Matrix m) { return row_reduce(m); }

inline bool is_invertible(const Matrix& m) {
  if (m.empty()) return true;
  if (m.size() != m[0].size()) return false;
  return rank(m) == m.size();
}

// Basis of the solution space of m x = 0, one vector per free column.
inline std::vector<std::vector<FieldElement>> null_space_basis(Matrix m,
                                                               const FieldSpec& spec,
                                                               std::size_t cols) {
  std::size_t rk = row_reduce(m);
  std::vector<std::size_t> pivot_col;
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t r = 0, c = 0; r < rk && c < cols; ++c) {
    if (!m[r][c].is_zero()) {
      pivot_col.push_back(c);
      is_pivot[c] = true;
      ++r;
    }
  }
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(cols, spec.zero());
    v[free] = spec.one();
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace napp

#endif
