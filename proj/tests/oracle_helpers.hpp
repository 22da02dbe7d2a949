#pragma once

#include <algorithm>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "torcoh/exterior.hpp"
#include "torcoh/intalg.hpp"
#include "torcoh/linalg.hpp"
#include "torcoh/mixed.hpp"
#include "torcoh/subtorus.hpp"

namespace torcoh::testing {

using Rng = std::mt19937_64;

inline IntMat random_int_matrix(Rng& rng, std::size_t rows, std::size_t cols, int bound) {
  std::uniform_int_distribution<int> dist(-bound, bound);
  IntMat m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = dist(rng);
  return m;
}

inline Rat random_rational(Rng& rng, int num_bound, int den_bound) {
  std::uniform_int_distribution<int> num(-num_bound, num_bound);
  std::uniform_int_distribution<int> den(1, den_bound);
  Rat r(num(rng), den(rng));
  r.canonicalize();
  return r;
}

inline Subtorus random_subtorus(Rng& rng, std::size_t ambient, std::size_t dim, int entry_bound,
                                int den_bound) {
  IntMat basis(0, ambient);
  while (true) {
    basis = random_int_matrix(rng, dim, ambient, entry_bound);
    if (int_rank(basis) == dim) break;
  }
  RatVec offset(ambient);
  for (auto& x : offset) x = random_rational(rng, 2, den_bound);
  return canonicalize(ambient, basis, offset);
}

// Elementary symmetric functions of the eigenvalues via Faddeev-LeVerrier;
// independent ground truth for traces of compound matrices.
inline std::vector<Rat> elementary_symmetric_of_eigenvalues(const IntMat& m) {
  std::size_t n = m.rows();
  RatMat a = to_rat(m);
  RatMat mk = a;
  std::vector<Rat> coeff(n + 1);  // coeff[k] = (-1)^k e_k
  coeff[0] = 1;
  for (std::size_t k = 1; k <= n; ++k) {
    Rat tr(0);
    for (std::size_t i = 0; i < n; ++i) tr += mk(i, i);
    coeff[k] = -tr / Rat(static_cast<long>(k));
    if (k == n) break;
    for (std::size_t i = 0; i < n; ++i) mk(i, i) += coeff[k];
    mk = mul(a, mk);
  }
  std::vector<Rat> e(n + 1);
  for (std::size_t k = 0; k <= n; ++k) e[k] = (k % 2 == 0) ? coeff[k] : -coeff[k];
  return e;
}

// Brute-force component enumeration by walking integer translates. The
// translates that make the two lifted cosets meet are exactly one coset of
// the saturated direction sum, and two translates hit the same component
// iff they differ by the plain direction sum, so walking a base translate
// plus one digit representative per Hermite residue reaches every component
// exactly once. Each hit is solved affinely over Q and clustered by
// canonical form; no spectral or coset-splitting machinery is shared with
// the library's intersect.
inline std::vector<Subtorus> brute_force_intersect(const Subtorus& t1, const Subtorus& t2) {
  std::size_t n = t1.ambient;
  const IntMat& b1 = t1.direction.basis();
  const IntMat& b2 = t2.direction.basis();
  IntMat stacked_int = vstack(b1, b2);
  RatMat stacked = to_rat(stacked_int);
  RatVec delta = vec_sub(t2.offset, t1.offset);
  Lattice common = lattice_rational_intersection(t1.direction, t2.direction);

  // Base translate: z must pair with the right kernel of the stacked
  // directions the same way -delta does.
  IntMat c = stacked_int.rows() ? right_kernel(stacked_int) : IntMat::identity(n);
  std::size_t k = c.cols();
  IntVec target(k);
  for (std::size_t col = 0; col < k; ++col) {
    Rat acc(0);
    for (std::size_t j = 0; j < n; ++j) acc += delta[j] * Rat(c(j, col));
    acc = -acc;
    if (!is_integer(acc)) return {};
    target[col] = acc.get_num();
  }
  auto base = solve_row_integer(c, target);
  if (!base) return {};

  Lattice sum = lattice_sum(t1.direction, t2.direction);
  Lattice sat = saturate(sum);
  const IntMat& s = sat.basis();
  auto x = solve_rows_integer(s, sum.basis());
  IntMat hx = hermite_rows(*x).H;

  std::vector<Int> digits(hx.rows(), Int(0));
  std::vector<Subtorus> found;
  while (true) {
    RatVec rhs = delta;
    for (std::size_t j = 0; j < n; ++j) rhs[j] += Rat((*base)[j]);
    for (std::size_t i = 0; i < hx.rows(); ++i)
      for (std::size_t j = 0; j < n; ++j) rhs[j] += Rat(digits[i]) * Rat(s(i, j));
    auto y = solve_left(stacked, rhs);
    if (!y) throw std::logic_error("brute_force_intersect: feasible translate failed to solve");
    RatVec point = t1.offset;
    for (std::size_t r = 0; r < b1.rows(); ++r)
      for (std::size_t j = 0; j < n; ++j) point[j] += (*y)[r] * Rat(b1(r, j));
    Subtorus comp = canonicalize(n, common.basis(), point);
    bool known = false;
    for (const Subtorus& f : found) known = known || f == comp;
    if (!known) found.push_back(comp);

    std::size_t i = 0;
    while (i < hx.rows() && digits[i] == hx(i, i) - 1) digits[i++] = 0;
    if (i == hx.rows()) break;
    ++digits[i];
  }
  std::sort(found.begin(), found.end(), subtorus_less);
  return found;
}

}  // namespace torcoh::testing
