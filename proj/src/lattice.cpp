#include "torcoh/lattice.hpp"

#include "torcoh/linalg.hpp"

namespace torcoh {

Lattice Lattice::from_rows(std::size_t ambient, const IntMat& generators) {
  if (generators.cols() != ambient) throw InputError("lattice generator width mismatch");
  Lattice l;
  l.ambient_ = ambient;
  HermiteResult h = hermite_rows(generators);
  l.basis_ = take_rows(h.H, 0, h.rank);
  return l;
}

Lattice saturate(const Lattice& l) {
  return Lattice::from_rows(l.ambient(), saturation_basis(l.basis()));
}

Lattice lattice_sum(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient()) throw InputError("lattice sum ambient mismatch");
  return Lattice::from_rows(a.ambient(), vstack(a.basis(), b.basis()));
}

Lattice lattice_rational_intersection(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient()) throw InputError("lattice intersection ambient mismatch");
  IntMat stacked = vstack(a.basis(), b.basis());
  IntMat ker = left_kernel(stacked);  // rows (u | v) with u*A + v*B = 0
  IntMat gens(ker.rows(), a.ambient());
  for (std::size_t i = 0; i < ker.rows(); ++i)
    for (std::size_t k = 0; k < a.rank(); ++k)
      for (std::size_t j = 0; j < a.ambient(); ++j) gens(i, j) += ker(i, k) * a.basis()(k, j);
  return Lattice::from_rows(a.ambient(), saturation_basis(gens));
}

Int index_of(const Lattice& sub, const Lattice& super) {
  if (sub.ambient() != super.ambient()) throw InputError("index_of ambient mismatch");
  if (sub.rank() != super.rank()) throw InputError("index_of rank mismatch");
  auto x = solve_rows_integer(super.basis(), sub.basis());
  if (!x) throw InputError("index_of: not a sublattice");
  SmithResult s = smith_normal_form(*x);
  if (s.invariants.size() != sub.rank()) throw InputError("index_of: spans differ");
  Int idx = 1;
  for (const Int& inv : s.invariants) idx *= inv;
  return idx;
}

bool lattice_contains(const Lattice& l, const IntVec& v) {
  return solve_row_integer(l.basis(), v).has_value();
}

bool same_rational_span(const Lattice& a, const Lattice& b) {
  if (a.ambient() != b.ambient() || a.rank() != b.rank()) return false;
  RatMat ra = to_rat(a.basis());
  for (std::size_t i = 0; i < b.rank(); ++i)
    if (!solve_left(ra, to_rat(b.basis().row(i)))) return false;
  return true;
}

}  // namespace torcoh
