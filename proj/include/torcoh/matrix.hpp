#pragma once

#include <cstddef>
#include <initializer_list>
#include <vector>

#include "torcoh/errors.hpp"
#include "torcoh/numbers.hpp"
#include "torcoh/quad.hpp"

namespace torcoh {

// Dense row-major matrix. Vectors are rows throughout the library and maps
// act on the right: x -> x*M. 0xN and Nx0 shapes are legal and represent
// zero modules.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::initializer_list<std::initializer_list<T>> rows) {
    rows_ = rows.size();
    cols_ = rows_ ? rows.begin()->size() : 0;
    data_.reserve(rows_ * cols_);
    for (const auto& r : rows) {
      if (r.size() != cols_) throw InputError("ragged matrix literal");
      data_.insert(data_.end(), r.begin(), r.end());
    }
  }

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T> row(std::size_t r) const {
    return std::vector<T>(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
  }
  void set_row(std::size_t r, const std::vector<T>& v) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(i, c), (*this)(j, c));
  }
  void negate_row(std::size_t i) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) = -(*this)(i, c);
  }
  // row i += k * row j
  void addmul_row(std::size_t i, std::size_t j, const T& k) {
    for (std::size_t c = 0; c < cols_; ++c) (*this)(i, c) += k * (*this)(j, c);
  }
  void swap_cols(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < rows_; ++r) std::swap((*this)(r, i), (*this)(r, j));
  }
  void negate_col(std::size_t i) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) = -(*this)(r, i);
  }
  // col i += k * col j
  void addmul_col(std::size_t i, std::size_t j, const T& k) {
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, i) += k * (*this)(r, j);
  }

  friend bool operator==(const Matrix& x, const Matrix& y) {
    return x.rows_ == y.rows_ && x.cols_ == y.cols_ && x.data_ == y.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using IntMat = Matrix<Int>;
using RatMat = Matrix<Rat>;
using QuadMat = Matrix<Quad>;

template <class T>
Matrix<T> mul(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.rows()) throw InputError("matrix product shape mismatch");
  Matrix<T> r(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const T& aik = a(i, k);
      if (aik == T(0)) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) r(i, j) += aik * b(k, j);
    }
  return r;
}

template <class T>
std::vector<T> mul_row(const std::vector<T>& v, const Matrix<T>& m) {
  if (v.size() != m.rows()) throw InputError("row-vector product shape mismatch");
  std::vector<T> r(m.cols(), T(0));
  for (std::size_t k = 0; k < m.rows(); ++k) {
    if (v[k] == T(0)) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) r[j] += v[k] * m(k, j);
  }
  return r;
}

template <class T>
Matrix<T> transpose(const Matrix<T>& m) {
  Matrix<T> r(m.cols(), m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(j, i) = m(i, j);
  return r;
}

template <class T>
Matrix<T> vstack(const Matrix<T>& a, const Matrix<T>& b) {
  if (a.cols() != b.cols()) throw InputError("vstack width mismatch");
  Matrix<T> r(a.rows() + b.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) r(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) r(a.rows() + i, j) = b(i, j);
  return r;
}

template <class T>
Matrix<T> take_rows(const Matrix<T>& m, std::size_t first, std::size_t count) {
  Matrix<T> r(count, m.cols());
  for (std::size_t i = 0; i < count; ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(first + i, j);
  return r;
}

inline RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Rat(m(i, j));
  return r;
}

inline RatVec to_rat(const IntVec& v) {
  RatVec r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
  return r;
}

inline QuadMat to_quad(const RatMat& m) {
  QuadMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = Quad(m(i, j));
  return r;
}

template <class T>
std::vector<T> vec_add(std::vector<T> a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

template <class T>
std::vector<T> vec_sub(std::vector<T> a, const std::vector<T>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

template <class T>
std::vector<T> vec_scale(std::vector<T> a, const T& k) {
  for (auto& x : a) x *= k;
  return a;
}

template <class T>
bool vec_is_zero(const std::vector<T>& v) {
  for (const auto& x : v)
    if (!(x == T(0))) return false;
  return true;
}

inline bool vec_is_integral(const RatVec& v) {
  for (const auto& x : v)
    if (!is_integer(x)) return false;
  return true;
}

inline RatVec frac_vec(RatVec v) {
  for (auto& x : v) x = rat_frac(x);
  return v;
}

}  // namespace torcoh
