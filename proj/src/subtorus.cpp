#include "torcoh/subtorus.hpp"

#include <algorithm>

#include "torcoh/linalg.hpp"

namespace torcoh {

namespace {

std::vector<std::size_t> pivot_columns(const IntMat& hnf_basis) {
  std::vector<std::size_t> pivots(hnf_basis.rows());
  for (std::size_t r = 0; r < hnf_basis.rows(); ++r) {
    std::size_t c = 0;
    while (hnf_basis(r, c) == 0) ++c;
    pivots[r] = c;
  }
  return pivots;
}

// Coefficients c with (x - c*B) zero on the pivot columns of B.
RatVec pivot_solve(const IntMat& basis, const std::vector<std::size_t>& pivots, const RatVec& x) {
  RatVec c(basis.rows(), Rat(0));
  for (std::size_t k = 0; k < basis.rows(); ++k) {
    Rat acc = x[pivots[k]];
    for (std::size_t i = 0; i < k; ++i) acc -= c[i] * Rat(basis(i, pivots[k]));
    c[k] = acc / Rat(basis(k, pivots[k]));
  }
  return c;
}

RatVec subtract_combination(const IntMat& basis, const RatVec& coeff, RatVec x) {
  for (std::size_t k = 0; k < basis.rows(); ++k)
    for (std::size_t j = 0; j < x.size(); ++j) x[j] -= coeff[k] * Rat(basis(k, j));
  return x;
}

}  // namespace

bool subtorus_less(const Subtorus& a, const Subtorus& b) {
  if (a.dim() != b.dim()) return a.dim() > b.dim();
  const IntMat& ba = a.direction.basis();
  const IntMat& bb = b.direction.basis();
  for (std::size_t i = 0; i < ba.rows(); ++i)
    for (std::size_t j = 0; j < ba.cols(); ++j)
      if (ba(i, j) != bb(i, j)) return ba(i, j) < bb(i, j);
  for (std::size_t j = 0; j < a.offset.size(); ++j)
    if (a.offset[j] != b.offset[j]) return a.offset[j] < b.offset[j];
  return false;
}

Subtorus canonicalize(std::size_t ambient, const IntMat& raw_direction, const RatVec& raw_offset) {
  IntMat raw = raw_direction.rows() == 0 ? IntMat(0, ambient) : raw_direction;
  if (raw.cols() != ambient) throw InputError("canonicalize: direction width mismatch");
  if (raw_offset.size() != ambient) throw InputError("canonicalize: offset length mismatch");
  if (int_rank(raw) != raw.rows()) throw InputError("canonicalize: dependent direction rows");

  Subtorus t;
  t.ambient = ambient;
  t.direction = saturate(Lattice::from_rows(ambient, raw));
  const IntMat& basis = t.direction.basis();
  std::size_t r = basis.rows();
  auto pivots = pivot_columns(basis);

  // Zero the pivot coordinates with the unique direction-space combination.
  RatVec a = subtract_combination(basis, pivot_solve(basis, pivots, raw_offset), raw_offset);

  // Free coordinates, and the lattice Z^N projects onto there.
  std::vector<std::size_t> free_cols;
  for (std::size_t j = 0, k = 0; j < ambient; ++j) {
    if (k < r && pivots[k] == j)
      ++k;
    else
      free_cols.push_back(j);
  }
  std::size_t f = free_cols.size();
  RatMat proj(ambient, f);
  for (std::size_t j = 0; j < ambient; ++j) {
    RatVec ej(ambient, Rat(0));
    ej[j] = 1;
    RatVec pj = subtract_combination(basis, pivot_solve(basis, pivots, ej), ej);
    for (std::size_t c = 0; c < f; ++c) proj(j, c) = pj[free_cols[c]];
  }
  Int ell = 1;
  for (std::size_t j = 0; j < ambient; ++j)
    for (std::size_t c = 0; c < f; ++c) ell = lcm(ell, proj(j, c).get_den());
  IntMat gens(ambient, f);
  for (std::size_t j = 0; j < ambient; ++j)
    for (std::size_t c = 0; c < f; ++c) {
      Rat scaled = proj(j, c) * Rat(ell);
      gens(j, c) = scaled.get_num();
    }
  HermiteResult h = hermite_rows(gens);
  if (h.rank != f) throw InconsistencyError("canonicalize: projected lattice lost rank");

  // Reduce the free part modulo the projected lattice (triangular sweep).
  RatVec v(f);
  for (std::size_t c = 0; c < f; ++c) v[c] = a[free_cols[c]] * Rat(ell);
  for (std::size_t k = 0; k < f; ++k) {
    Int q = rat_floor(v[k] / Rat(h.H(k, k)));
    if (q != 0)
      for (std::size_t c = k; c < f; ++c) v[c] -= Rat(q) * Rat(h.H(k, c));
  }

  t.offset.assign(ambient, Rat(0));
  for (std::size_t c = 0; c < f; ++c) t.offset[free_cols[c]] = v[c] / Rat(ell);
  return t;
}

bool contains_point(const Subtorus& t, const RatVec& p) {
  if (p.size() != t.ambient) throw InputError("contains_point: dimension mismatch");
  return solve_mixed(to_rat(t.direction.basis()), IntMat::identity(t.ambient),
                     vec_sub(p, t.offset))
      .has_value();
}

bool contains_torus(const Subtorus& outer, const Subtorus& inner) {
  if (outer.ambient != inner.ambient) throw InputError("contains_torus: ambient mismatch");
  if (inner.dim() > outer.dim()) return false;
  RatMat ob = to_rat(outer.direction.basis());
  for (std::size_t i = 0; i < inner.dim(); ++i)
    if (!solve_left(ob, to_rat(inner.direction.basis().row(i)))) return false;
  return contains_point(outer, inner.offset);
}

std::vector<Subtorus> intersect(const Subtorus& t1, const Subtorus& t2) {
  if (t1.ambient != t2.ambient) throw InputError("intersect: ambient mismatch");
  std::size_t n = t1.ambient;
  const IntMat& b1 = t1.direction.basis();
  const IntMat& b2 = t2.direction.basis();

  auto witness = solve_mixed(to_rat(vstack(b1, b2)), IntMat::identity(n),
                             vec_sub(t2.offset, t1.offset));
  if (!witness) return {};

  // Base point on both cosets.
  RatVec x0 = t1.offset;
  for (std::size_t k = 0; k < b1.rows(); ++k)
    for (std::size_t j = 0; j < n; ++j) x0[j] += witness->y[k] * Rat(b1(k, j));

  Lattice common = lattice_rational_intersection(t1.direction, t2.direction);
  Lattice sum = lattice_sum(t1.direction, t2.direction);
  Lattice sum_sat = saturate(sum);

  // Components correspond to (Z^N cap (V1+V2)) / (L1+L2); enumerate coset
  // representatives from the Smith form of the coordinate matrix of the sum.
  auto x = solve_rows_integer(sum_sat.basis(), sum.basis());
  if (!x) throw InconsistencyError("intersect: sum lattice escaped its saturation");
  SmithResult s = smith_normal_form(*x);
  std::size_t r = sum.rank();
  if (s.invariants.size() != r) throw InconsistencyError("intersect: saturation rank mismatch");

  std::vector<IntVec> reps;
  reps.push_back(IntVec(r, Int(0)));
  for (std::size_t i = 0; i < r; ++i) {
    std::size_t grow = static_cast<std::size_t>(s.invariants[i].get_ui());
    if (grow <= 1) continue;
    std::vector<IntVec> next;
    for (const IntVec& base : reps)
      for (std::size_t mval = 0; mval < grow; ++mval) {
        IntVec e = base;
        e[i] = static_cast<long>(mval);
        next.push_back(e);
      }
    reps = std::move(next);
  }

  RatMat stacked = to_rat(vstack(b1, b2));
  std::vector<Subtorus> components;
  for (const IntVec& mvec : reps) {
    // z = (m*V)*B_sat is an integer vector in the saturation.
    IntVec mv = mul_row(mvec, s.V);
    IntVec z = mul_row(mv, sum_sat.basis());
    auto split = solve_left(stacked, to_rat(z));
    if (!split) throw InconsistencyError("intersect: coset representative escaped V1+V2");
    RatVec point = x0;
    for (std::size_t k = 0; k < b1.rows(); ++k)
      for (std::size_t j = 0; j < n; ++j) point[j] += (*split)[k] * Rat(b1(k, j));
    components.push_back(canonicalize(n, common.basis(), point));
  }

  std::sort(components.begin(), components.end(), subtorus_less);
  for (std::size_t i = 0; i + 1 < components.size(); ++i)
    if (components[i] == components[i + 1])
      throw InconsistencyError("intersect: duplicate components");
  for (const Subtorus& c : components)
    if (!contains_torus(t1, c) || !contains_torus(t2, c))
      throw InconsistencyError("intersect: component escaped an input torus");
  return components;
}

Subtorus subtorus_from_face(const FaceSpec& f, std::size_t ambient) {
  if (f.n.size() != ambient || f.k.size() != ambient || f.anchor.size() != ambient)
    throw InputError("subtorus_from_face: dimension mismatch");
  RatMat constraints(4, ambient);
  for (std::size_t j = 0; j < ambient; ++j) {
    constraints(0, j) = f.n[j].a;
    constraints(1, j) = f.n[j].b;
    constraints(2, j) = f.k[j].a;
    constraints(3, j) = f.k[j].b;
  }
  Int ell = 1;
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < ambient; ++j) ell = lcm(ell, constraints(i, j).get_den());
  IntMat scaled(4, ambient);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < ambient; ++j) {
      Rat v = constraints(i, j) * Rat(ell);
      scaled(i, j) = v.get_num();
    }
  IntMat dir = left_kernel(transpose(scaled));
  if (dir.rows() != ambient - 2)
    throw InputError("face data does not cut a codimension-2 torus (kernel dimension " +
                     std::to_string(dir.rows()) + ")");
  return canonicalize(ambient, dir, f.anchor);
}

std::optional<Subtorus> knit(const Subtorus& t_a, const Subtorus& t_b, const QuadVec& n) {
  if (t_a.ambient != t_b.ambient) throw InputError("knit: ambient mismatch");
  if (!(t_a.direction == t_b.direction)) throw InputError("knit: direction lattices differ");
  std::size_t amb = t_a.ambient;
  if (n.size() != amb) throw InputError("knit: direction vector length mismatch");

  // Rational members of Q(sqrt d)*n: (s + t*sqrt d)*n is rational iff
  // s*n_irr + t*n_rat vanishes, so read the pairs (s,t) off a 2xN kernel.
  long d = 0;
  for (const Quad& q : n) d = quad_merge_d(d, q.d);
  RatMat pairs(2, amb);
  for (std::size_t j = 0; j < amb; ++j) {
    pairs(0, j) = n[j].b;
    pairs(1, j) = n[j].a;
  }
  RatMat st = left_nullspace(pairs);
  RatMat extra(st.rows(), amb);
  for (std::size_t i = 0; i < st.rows(); ++i)
    for (std::size_t j = 0; j < amb; ++j)
      extra(i, j) = st(i, 0) * n[j].a + st(i, 1) * Rat(d) * n[j].b;

  RatMat a_rat = vstack(to_rat(t_a.direction.basis()), extra);
  if (!solve_mixed(a_rat, IntMat::identity(amb), vec_sub(t_b.offset, t_a.offset)))
    return std::nullopt;
  return t_a;
}

}  // namespace torcoh
