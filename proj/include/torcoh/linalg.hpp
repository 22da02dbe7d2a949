#pragma once

#include <optional>

#include "torcoh/matrix.hpp"

namespace torcoh {

// Gaussian elimination over an exact field (Rat or Quad). Pivot choice is
// the first nonzero entry in column order, so results are deterministic.

template <class T>
std::size_t field_rank(Matrix<T> a) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < a.rows() && a(piv, col) == T(0)) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(rank, piv);
    for (std::size_t i = rank + 1; i < a.rows(); ++i) {
      if (a(i, col) == T(0)) continue;
      T f = a(i, col) / a(rank, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    ++rank;
  }
  return rank;
}

// Reduced row echelon form; returns the nonzero rows.
template <class T>
Matrix<T> row_space_basis(Matrix<T> a) {
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < a.rows() && a(piv, col) == T(0)) ++piv;
    if (piv == a.rows()) continue;
    a.swap_rows(rank, piv);
    T inv = T(1) / a(rank, col);
    for (std::size_t j = col; j < a.cols(); ++j) a(rank, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == rank || a(i, col) == T(0)) continue;
      T f = a(i, col);
      for (std::size_t j = col; j < a.cols(); ++j) a(i, j) -= f * a(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  return take_rows(a, 0, rank);
}

// Basis rows of { u : u*A = 0 } over the field.
template <class T>
Matrix<T> left_nullspace(const Matrix<T>& a) {
  std::size_t m = a.rows();
  Matrix<T> work(m, a.cols() + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) work(i, j) = a(i, j);
    work(i, a.cols() + i) = T(1);
  }
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && work(piv, col) == T(0)) ++piv;
    if (piv == m) continue;
    work.swap_rows(rank, piv);
    for (std::size_t i = rank + 1; i < m; ++i) {
      if (work(i, col) == T(0)) continue;
      T f = work(i, col) / work(rank, col);
      for (std::size_t j = col; j < work.cols(); ++j) work(i, j) -= f * work(rank, j);
    }
    ++rank;
  }
  Matrix<T> ker(m - rank, m);
  for (std::size_t i = rank; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) ker(i - rank, j) = work(i, a.cols() + j);
  return ker;
}

// Solves y*A = b over the field; returns one witness (deterministic) or
// nothing when b is outside the row space.
template <class T>
std::optional<std::vector<T>> solve_left(const Matrix<T>& a, const std::vector<T>& b) {
  if (b.size() != a.cols()) throw InputError("solve_left shape mismatch");
  std::size_t m = a.rows();
  // Eliminate on [A | I] so coefficients in terms of original rows survive.
  Matrix<T> work(m, a.cols() + m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) work(i, j) = a(i, j);
    work(i, a.cols() + i) = T(1);
  }
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_col;
  for (std::size_t col = 0; col < a.cols() && rank < m; ++col) {
    std::size_t piv = rank;
    while (piv < m && work(piv, col) == T(0)) ++piv;
    if (piv == m) continue;
    work.swap_rows(rank, piv);
    for (std::size_t i = 0; i < m; ++i) {
      if (i == rank || work(i, col) == T(0)) continue;
      T f = work(i, col) / work(rank, col);
      for (std::size_t j = col; j < work.cols(); ++j) work(i, j) -= f * work(rank, j);
    }
    pivot_col.push_back(col);
    ++rank;
  }
  std::vector<T> residual = b;
  std::vector<T> coeff(m, T(0));
  for (std::size_t r = 0; r < rank; ++r) {
    std::size_t c = pivot_col[r];
    if (residual[c] == T(0)) continue;
    T f = residual[c] / work(r, c);
    for (std::size_t j = 0; j < a.cols(); ++j) residual[j] -= f * work(r, j);
    for (std::size_t i = 0; i < m; ++i) coeff[i] += f * work(r, a.cols() + i);
  }
  if (!vec_is_zero(residual)) return std::nullopt;
  return coeff;
}

}  // namespace torcoh
