#include "torcoh/intalg.hpp"

#include <cstdlib>

namespace torcoh {

namespace {

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

HermiteResult hermite_rows(const IntMat& m) {
  HermiteResult res;
  res.H = m;
  res.U = IntMat::identity(m.rows());
  IntMat& h = res.H;
  IntMat& u = res.U;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    // Euclidean reduction within the column until one nonzero survives.
    while (true) {
      std::size_t piv = m.rows();
      for (std::size_t i = row; i < m.rows(); ++i) {
        if (h(i, col) == 0) continue;
        if (piv == m.rows() || abs_int(h(i, col)) < abs_int(h(piv, col))) piv = i;
      }
      if (piv == m.rows()) break;
      h.swap_rows(row, piv);
      u.swap_rows(row, piv);
      bool clean = true;
      for (std::size_t i = row + 1; i < m.rows(); ++i) {
        if (h(i, col) == 0) continue;
        Int q = -floor_div(h(i, col), h(row, col));
        h.addmul_row(i, row, q);
        u.addmul_row(i, row, q);
        if (h(i, col) != 0) clean = false;
      }
      if (clean) break;
    }
    if (row < m.rows() && h(row, col) != 0) {
      if (h(row, col) < 0) {
        h.negate_row(row);
        u.negate_row(row);
      }
      for (std::size_t i = 0; i < row; ++i) {
        Int q = -floor_div(h(i, col), h(row, col));
        if (q != 0) {
          h.addmul_row(i, row, q);
          u.addmul_row(i, row, q);
        }
      }
      ++row;
    }
  }
  res.rank = row;
  return res;
}

SmithResult smith_normal_form(const IntMat& m) {
  SmithResult res;
  res.D = m;
  res.U = IntMat::identity(m.rows());
  res.V = IntMat::identity(m.cols());
  IntMat& d = res.D;
  IntMat& u = res.U;  // inverse row ops: row op E on D pairs with col op E^-1 on U
  IntMat& v = res.V;  // inverse col ops: col op F on D pairs with row op F^-1 on V

  auto row_add = [&](std::size_t i, std::size_t j, const Int& k) {
    d.addmul_row(i, j, k);
    u.addmul_col(j, i, -k);
  };
  auto col_add = [&](std::size_t i, std::size_t j, const Int& k) {
    d.addmul_col(i, j, k);
    v.addmul_row(j, i, -k);
  };
  auto row_swap = [&](std::size_t i, std::size_t j) {
    d.swap_rows(i, j);
    u.swap_cols(i, j);
  };
  auto col_swap = [&](std::size_t i, std::size_t j) {
    d.swap_cols(i, j);
    v.swap_rows(i, j);
  };
  auto row_negate = [&](std::size_t i) {
    d.negate_row(i);
    u.negate_col(i);
  };

  std::size_t n = std::min(m.rows(), m.cols());
  std::size_t t = 0;
  for (; t < n; ++t) {
    // Pivot: minimal absolute value in the untouched block.
    std::size_t pr = m.rows(), pc = m.cols();
    for (std::size_t i = t; i < m.rows(); ++i)
      for (std::size_t j = t; j < m.cols(); ++j) {
        if (d(i, j) == 0) continue;
        if (pr == m.rows() || abs_int(d(i, j)) < abs_int(d(pr, pc))) {
          pr = i;
          pc = j;
        }
      }
    if (pr == m.rows()) break;
    row_swap(t, pr);
    col_swap(t, pc);

    while (true) {
      bool dirty = false;
      for (std::size_t i = t + 1; i < m.rows(); ++i) {
        if (d(i, t) == 0) continue;
        row_add(i, t, -floor_div(d(i, t), d(t, t)));
        if (d(i, t) != 0) dirty = true;
      }
      for (std::size_t j = t + 1; j < m.cols(); ++j) {
        if (d(t, j) == 0) continue;
        col_add(j, t, -floor_div(d(t, j), d(t, t)));
        if (d(t, j) != 0) dirty = true;
      }
      if (dirty) {
        // A nonzero remainder is strictly smaller than the pivot; promote it.
        std::size_t pr2 = m.rows(), pc2 = m.cols();
        for (std::size_t i = t; i < m.rows(); ++i)
          for (std::size_t j = t; j < m.cols(); ++j) {
            if (d(i, j) == 0 || (i > t && j > t)) continue;
            if (i == t && j == t) continue;
            if (pr2 == m.rows() || abs_int(d(i, j)) < abs_int(d(pr2, pc2))) {
              pr2 = i;
              pc2 = j;
            }
          }
        if (pr2 == m.rows()) continue;
        if (abs_int(d(pr2, pc2)) < abs_int(d(t, t))) {
          row_swap(t, pr2);
          col_swap(t, pc2);
        }
        continue;
      }
      // Row t and column t are clean; enforce divisibility into the rest.
      bool fixed = true;
      for (std::size_t i = t + 1; i < m.rows() && fixed; ++i)
        for (std::size_t j = t + 1; j < m.cols() && fixed; ++j) {
          if (d(i, j) % d(t, t) != 0) {
            row_add(t, i, 1);
            fixed = false;
          }
        }
      if (fixed) break;
    }
    if (d(t, t) < 0) row_negate(t);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (d(i, i) != 0) res.invariants.push_back(d(i, i));
  return res;
}

std::size_t int_rank(const IntMat& m) { return hermite_rows(m).rank; }

Int det(const IntMat& m) {
  if (m.rows() != m.cols()) throw InputError("determinant of a non-square matrix");
  std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMat a = m;
  Int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a(piv, k) == 0) ++piv;
      if (piv == n) return 0;
      a.swap_rows(k, piv);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        Int num = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        a(i, j) = num / prev;
      }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

IntMat left_kernel(const IntMat& m) {
  HermiteResult h = hermite_rows(m);
  return take_rows(h.U, h.rank, m.rows() - h.rank);
}

IntMat right_kernel(const IntMat& m) { return transpose(left_kernel(transpose(m))); }

std::optional<IntVec> solve_row_integer(const IntMat& a, const IntVec& b) {
  if (b.size() != a.cols()) throw InputError("solve_row_integer shape mismatch");
  HermiteResult h = hermite_rows(a);
  std::vector<std::size_t> pivot_col(h.rank);
  for (std::size_t r = 0; r < h.rank; ++r) {
    std::size_t c = 0;
    while (h.H(r, c) == 0) ++c;
    pivot_col[r] = c;
  }
  IntVec residual = b;
  IntVec coeff(h.rank, Int(0));
  for (std::size_t r = 0; r < h.rank; ++r) {
    std::size_t c = pivot_col[r];
    if (residual[c] % h.H(r, c) != 0) return std::nullopt;
    Int q = residual[c] / h.H(r, c);
    coeff[r] = q;
    if (q != 0)
      for (std::size_t j = 0; j < a.cols(); ++j) residual[j] -= q * h.H(r, j);
  }
  for (const Int& x : residual)
    if (x != 0) return std::nullopt;
  IntVec z(a.rows(), Int(0));
  for (std::size_t r = 0; r < h.rank; ++r)
    for (std::size_t i = 0; i < a.rows(); ++i) z[i] += coeff[r] * h.U(r, i);
  return z;
}

std::optional<IntMat> solve_rows_integer(const IntMat& a, const IntMat& b) {
  if (a.cols() != b.cols()) throw InputError("solve_rows_integer shape mismatch");
  IntMat x(b.rows(), a.rows());
  for (std::size_t i = 0; i < b.rows(); ++i) {
    auto z = solve_row_integer(a, b.row(i));
    if (!z) return std::nullopt;
    x.set_row(i, *z);
  }
  return x;
}

IntMat saturation_basis(const IntMat& m) {
  SmithResult s = smith_normal_form(m);
  std::size_t r = s.invariants.size();
  HermiteResult h = hermite_rows(take_rows(s.V, 0, r));
  return take_rows(h.H, 0, r);
}

}  // namespace torcoh
