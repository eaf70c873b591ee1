#pragma once

#include <cstddef>
#include <optional>
#include <vector>

namespace d4g2 {

template <class T>
using Matrix = std::vector<std::vector<T>>;

// Reduced row echelon form in place; returns pivot columns.
template <class T>
std::vector<std::size_t> rref(Matrix<T>& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col].is_zero()) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    T inv = T(1) / m[row][col];
    for (std::size_t k = col; k < m[row].size(); ++k) m[row][k] *= inv;
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      T f = m[r][col];
      for (std::size_t k = col; k < m[r].size(); ++k)
        if (!m[row][k].is_zero()) m[r][k] -= f * m[row][k];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

template <class T>
std::size_t rank(Matrix<T> m) {
  if (m.empty()) return 0;
  return rref(m, m[0].size()).size();
}

// Basis of {x : m x = 0}.
template <class T>
std::vector<std::vector<T>> nullspace(Matrix<T> m, std::size_t ncols) {
  auto pivots = rref(m, ncols);
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<T>> basis;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<T> v(ncols);
    v[free] = T(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

// Some solution of m x = b, or nullopt when inconsistent.
template <class T>
std::optional<std::vector<T>> solve(Matrix<T> m, const std::vector<T>& b, std::size_t ncols) {
  for (std::size_t r = 0; r < m.size(); ++r) m[r].push_back(b[r]);
  auto pivots = rref(m, ncols + 1);
  if (!pivots.empty() && pivots.back() == ncols) return std::nullopt;
  std::vector<T> x(ncols);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][ncols];
  return x;
}


template <class T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b) {
  std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  Matrix<T> r(n, std::vector<T>(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (std::size_t j = 0; j < m; ++j)
        if (!b[l][j].is_zero()) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

template <class T>
Matrix<T> identity_matrix(std::size_t n) {
  Matrix<T> r(n, std::vector<T>(n));
  for (std::size_t i = 0; i < n; ++i) r[i][i] = T(1);
  return r;
}

}  // namespace d4g2
