#pragma once

#include <optional>

#include "torcoh/matrix.hpp"

namespace torcoh {

// Row Hermite normal form. U is unimodular with U*M = H; the first `rank`
// rows of H are the HNF basis (positive pivots on strictly increasing
// columns, entries above each pivot reduced into [0, pivot)), the rest are
// zero.
struct HermiteResult {
  IntMat H;
  IntMat U;
  std::size_t rank = 0;
};
HermiteResult hermite_rows(const IntMat& m);

// Smith normal form M = U*D*V with U, V unimodular and D diagonal,
// d_1 | d_2 | ... | d_k, d_i > 0. `invariants` lists the nonzero d_i.
struct SmithResult {
  IntMat U;
  IntMat D;
  IntMat V;
  std::vector<Int> invariants;
};
SmithResult smith_normal_form(const IntMat& m);

std::size_t int_rank(const IntMat& m);

// Determinant of a square matrix (Bareiss fraction-free elimination).
Int det(const IntMat& m);

// Basis of { u : u*M = 0 }, one row per kernel generator; the rows are a
// saturated lattice basis (they extend to a unimodular matrix).
IntMat left_kernel(const IntMat& m);

// N x k matrix C with M*C = 0 whose columns span the right kernel.
IntMat right_kernel(const IntMat& m);

// One integer solution z of z*A = b, or nothing. Deterministic.
std::optional<IntVec> solve_row_integer(const IntMat& a, const IntVec& b);

// X with X*A = B over the integers, or nothing (rows solved independently).
std::optional<IntMat> solve_rows_integer(const IntMat& a, const IntMat& b);

// HNF basis of Z^cols(M) intersect span_Q(rows of M).
IntMat saturation_basis(const IntMat& m);

}  // namespace torcoh
