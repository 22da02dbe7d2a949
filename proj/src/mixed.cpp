#include "torcoh/mixed.hpp"

#include "torcoh/intalg.hpp"
#include "torcoh/linalg.hpp"

namespace torcoh {

namespace {

IntMat clear_denominators(const RatMat& m) {
  IntMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Int l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j) l = lcm(l, m(i, j).get_den());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Rat scaled = m(i, j) * Rat(l);
      r(i, j) = scaled.get_num();
    }
  }
  return r;
}

}  // namespace

std::optional<MixedSolution> solve_mixed(const RatMat& a_rat, const IntMat& a_int, const RatVec& b) {
  std::size_t n = b.size();
  if ((a_rat.rows() && a_rat.cols() != n) || (a_int.rows() && a_int.cols() != n))
    throw InputError("solve_mixed shape mismatch");

  // C's columns span the right kernel of A_rat, so x*C = 0 on rowspace(A_rat).
  IntMat c = a_rat.rows() ? right_kernel(clear_denominators(a_rat)) : IntMat::identity(n);

  IntMat m(a_int.rows(), c.cols());
  for (std::size_t i = 0; i < a_int.rows(); ++i)
    for (std::size_t k = 0; k < n; ++k) {
      if (a_int(i, k) == 0) continue;
      for (std::size_t j = 0; j < c.cols(); ++j) m(i, j) += a_int(i, k) * c(k, j);
    }
  RatVec v(c.cols(), Rat(0));
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t j = 0; j < c.cols(); ++j) v[j] += b[k] * Rat(c(k, j));

  if (!vec_is_integral(v)) return std::nullopt;
  IntVec vz(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) vz[j] = v[j].get_num();

  auto z = solve_row_integer(m, vz);
  if (!z) return std::nullopt;

  RatVec residual = b;
  for (std::size_t i = 0; i < a_int.rows(); ++i)
    for (std::size_t k = 0; k < n; ++k) residual[k] -= Rat((*z)[i]) * Rat(a_int(i, k));

  MixedSolution sol;
  sol.z = *z;
  if (a_rat.rows()) {
    auto y = solve_left(a_rat, residual);
    if (!y) throw InconsistencyError("solve_mixed: residual escaped the rational row space");
    sol.y = *y;
  } else if (!vec_is_zero(residual)) {
    return std::nullopt;
  }
  return sol;
}

}  // namespace torcoh
