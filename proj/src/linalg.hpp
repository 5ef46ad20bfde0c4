#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "error.hpp"

namespace apc {

// Dense exact linear algebra over a field F (Rational or Scalar). Plain
// Gaussian elimination; pivot selection is "first nonzero", which is all an
// exact field needs. Sizes here are small (ranks, inverses of congruence
// transforms, nullspaces of difference constraints).
template <class F>
using Matrix = std::vector<std::vector<F>>;

template <class F>
Matrix<F> identity_matrix(std::size_t n) {
  Matrix<F> m(n, std::vector<F>(n, F(0)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = F(1);
  return m;
}

template <class F>
Matrix<F> transpose(const Matrix<F>& a) {
  if (a.empty()) return {};
  Matrix<F> t(a[0].size(), std::vector<F>(a.size(), F(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  return t;
}

template <class F>
Matrix<F> multiply(const Matrix<F>& a, const Matrix<F>& b) {
  if (a.empty() || b.empty()) return {};
  if (a[0].size() != b.size()) fail(ErrorCode::internal, "matrix shape mismatch in multiply");
  Matrix<F> c(a.size(), std::vector<F>(b[0].size(), F(0)));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t k = 0; k < b.size(); ++k) {
      if (a[i][k] == F(0)) continue;
      for (std::size_t j = 0; j < b[0].size(); ++j) c[i][j] += a[i][k] * b[k][j];
    }
  return c;
}

// Reduces `a` in place to row echelon form, returns the rank.
template <class F>
std::size_t row_reduce(Matrix<F>& a) {
  if (a.empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  std::size_t rank = 0;
  for (std::size_t col = 0; col < cols && rank < rows; ++col) {
    std::size_t pivot = rank;
    while (pivot < rows && a[pivot][col] == F(0)) ++pivot;
    if (pivot == rows) continue;
    std::swap(a[rank], a[pivot]);
    const F inv = F(1) / a[rank][col];
    for (std::size_t j = col; j < cols; ++j) a[rank][j] = a[rank][j] * inv;
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || a[r][col] == F(0)) continue;
      const F factor = a[r][col];
      for (std::size_t j = col; j < cols; ++j) a[r][j] = a[r][j] - factor * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

template <class F>
std::size_t rank(Matrix<F> a) {
  return row_reduce(a);
}

template <class F>
std::size_t nullity(const Matrix<F>& a) {
  if (a.empty()) return 0;
  Matrix<F> copy = a;
  return a[0].size() - row_reduce(copy);
}

// Basis of the right nullspace, one vector per column vector of the result.
template <class F>
std::vector<std::vector<F>> nullspace_basis(Matrix<F> a) {
  if (a.empty()) return {};
  const std::size_t cols = a[0].size();
  row_reduce(a);
  // In reduced echelon form the pivot column of a row is its first nonzero
  // entry (normalized to 1).
  std::vector<std::ptrdiff_t> pivot_of_col(cols, -1);
  for (std::size_t r = 0; r < a.size(); ++r) {
    std::size_t lead = 0;
    while (lead < cols && a[r][lead] == F(0)) ++lead;
    if (lead == cols) break;
    pivot_of_col[lead] = static_cast<std::ptrdiff_t>(r);
  }
  std::vector<std::vector<F>> basis;
  for (std::size_t freecol = 0; freecol < cols; ++freecol) {
    if (pivot_of_col[freecol] >= 0) continue;
    std::vector<F> v(cols, F(0));
    v[freecol] = F(1);
    for (std::size_t col = 0; col < cols; ++col) {
      if (pivot_of_col[col] >= 0)
        v[col] = F(0) - a[static_cast<std::size_t>(pivot_of_col[col])][freecol];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

template <class F>
std::optional<Matrix<F>> inverse(Matrix<F> a) {
  const std::size_t n = a.size();
  for (auto& row : a)
    if (row.size() != n) fail(ErrorCode::internal, "inverse of non-square matrix");
  Matrix<F> inv = identity_matrix<F>(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a[pivot][col] == F(0)) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const F scale = F(1) / a[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      a[col][j] = a[col][j] * scale;
      inv[col][j] = inv[col][j] * scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a[r][col] == F(0)) continue;
      const F factor = a[r][col];
      for (std::size_t j = 0; j < n; ++j) {
        a[r][j] = a[r][j] - factor * a[col][j];
        inv[r][j] = inv[r][j] - factor * inv[col][j];
      }
    }
  }
  return inv;
}

}  // namespace apc
