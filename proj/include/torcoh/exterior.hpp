#pragma once

#include "torcoh/matrix.hpp"

namespace torcoh {

// All q-element subsets of {0..n-1}, each ascending, in lexicographic order.
// This ordering is the global basis convention for exterior powers.
inline std::vector<std::vector<std::size_t>> index_subsets(std::size_t n, std::size_t q) {
  std::vector<std::vector<std::size_t>> out;
  if (q > n) return out;
  std::vector<std::size_t> cur(q);
  for (std::size_t i = 0; i < q; ++i) cur[i] = i;
  while (true) {
    out.push_back(cur);
    std::size_t i = q;
    while (i > 0 && cur[i - 1] == n - q + (i - 1)) --i;
    if (i == 0) break;
    ++cur[i - 1];
    for (std::size_t j = i; j < q; ++j) cur[j] = cur[j - 1] + 1;
  }
  return out;
}

template <class T>
T det_laplace(const Matrix<T>& m, const std::vector<std::size_t>& rows,
              const std::vector<std::size_t>& cols) {
  std::size_t q = rows.size();
  if (q == 0) return T(1);
  if (q == 1) return m(rows[0], cols[0]);
  T acc(0);
  std::vector<std::size_t> sub(rows.begin() + 1, rows.end());
  T sign(1);
  for (std::size_t k = 0; k < q; ++k) {
    if (!(m(rows[0], cols[k]) == T(0))) {
      std::vector<std::size_t> rest;
      rest.reserve(q - 1);
      for (std::size_t j = 0; j < q; ++j)
        if (j != k) rest.push_back(cols[j]);
      acc += sign * m(rows[0], cols[k]) * det_laplace(m, sub, rest);
    }
    sign = -sign;
  }
  return acc;
}

// q-th compound matrix: entry (I,J) is the minor of M on row set I and
// column set J, index sets in lexicographic order. Functorial by
// Cauchy-Binet, which is what makes the induced homology maps compose.
template <class T>
Matrix<T> exterior_power(const Matrix<T>& m, std::size_t q) {
  auto ris = index_subsets(m.rows(), q);
  auto cis = index_subsets(m.cols(), q);
  Matrix<T> r(ris.size(), cis.size());
  for (std::size_t i = 0; i < ris.size(); ++i)
    for (std::size_t j = 0; j < cis.size(); ++j) r(i, j) = det_laplace(m, ris[i], cis[j]);
  return r;
}

template <class T>
T trace(const Matrix<T>& m) {
  T t(0);
  for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
  return t;
}

}  // namespace torcoh
