#include "torcoh/equivariant.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "torcoh/exterior.hpp"
#include "torcoh/intalg.hpp"
#include "torcoh/linalg.hpp"

namespace torcoh {

namespace {

struct SubtorusCmp {
  bool operator()(const Subtorus& a, const Subtorus& b) const { return subtorus_less(a, b); }
};

// Sparse action of one group element on one E1 block: chain ci maps to
// chain target[ci], with fiber coordinates transformed by fiber[ci].
struct BlockAction {
  std::vector<std::size_t> target;
  std::vector<IntMat> fiber;
};

BlockAction block_action(const SpectralPage& page, const PosetAction& action, std::size_t g,
                         std::size_t p, std::size_t q) {
  const auto& chs = page.chains_by_p[p];
  BlockAction ba;
  ba.target.resize(chs.size());
  ba.fiber.resize(chs.size());
  for (std::size_t ci = 0; ci < chs.size(); ++ci) {
    Chain img;
    img.reserve(chs[ci].size());
    for (std::size_t id : chs[ci]) img.push_back(action.image[g][id]);
    auto it = std::lower_bound(chs.begin(), chs.end(), img);
    if (it == chs.end() || *it != img)
      throw InconsistencyError("chain image is missing from the spectral page");
    ba.target[ci] = static_cast<std::size_t>(it - chs.begin());
    ba.fiber[ci] = exterior_power(action.lattice_map[g][chs[ci].back()], q);
  }
  return ba;
}

// Content tensored with the determinant character. Poincare duality on the
// ambient torus identifies H_{N-n} with H^n only up to this twist, which is
// trivial for orientation-preserving groups.
IrrepDecomposition det_twist(const IrrepDecomposition& d, const SymmetryData& sym) {
  if (d.mult.empty()) return d;
  std::vector<Quad> chi(sym.table.class_count(), Quad(0));
  for (std::size_t rho = 0; rho < sym.table.irrep_count(); ++rho) {
    auto it = d.mult.find(sym.table.names[rho]);
    if (it == d.mult.end()) continue;
    for (std::size_t c = 0; c < sym.table.class_count(); ++c)
      chi[c] += Quad(Int(it->second)) * sym.table.chi[rho][c];
  }
  for (std::size_t cl = 0; cl < sym.group.classes.size(); ++cl)
    if (det(sym.group.elements[sym.group.class_rep[cl]].mat) < 0)
      chi[sym.class_map[cl]] = -chi[sym.class_map[cl]];
  return decompose(chi, sym.table);
}

// v * M for the sparse block action matrix M.
template <class T>
std::vector<T> apply_block(const BlockAction& ba, const std::vector<std::size_t>& off,
                           const std::vector<T>& v) {
  std::vector<T> out(v.size(), T(0));
  for (std::size_t ci = 0; ci < ba.target.size(); ++ci) {
    const IntMat& w = ba.fiber[ci];
    std::size_t so = off[ci];
    std::size_t to = off[ba.target[ci]];
    for (std::size_t i = 0; i < w.rows(); ++i) {
      if (v[so + i] == T(0)) continue;
      for (std::size_t j = 0; j < w.cols(); ++j)
        if (w(i, j) != 0) out[to + j] += v[so + i] * T(w(i, j));
    }
  }
  return out;
}

}  // namespace

PosetAction act_on_poset(const IntersectionPoset& poset, const FiniteMatrixGroup& group) {
  if (poset.ambient != group.ambient)
    throw InputError("group and poset ambient dimensions differ");
  std::map<Subtorus, std::size_t, SubtorusCmp> lookup;
  for (const auto& el : poset.elements) lookup.emplace(el.torus, el.id);
  std::set<std::size_t> input_ids;
  for (const auto& t : poset.input_tori) {
    auto it = lookup.find(t);
    if (it != lookup.end()) input_ids.insert(it->second);
  }

  PosetAction action;
  action.image.resize(group.order());
  action.lattice_map.resize(group.order());
  for (std::size_t g = 0; g < group.order(); ++g) {
    const GroupElement& ge = group.elements[g];
    RatMat m_rat = to_rat(ge.mat);
    action.image[g].resize(poset.elements.size());
    action.lattice_map[g].resize(poset.elements.size());
    for (const auto& el : poset.elements) {
      IntMat dir = mul(el.torus.direction.basis(), ge.mat);
      RatVec off = vec_add(mul_row(el.torus.offset, m_rat), ge.trans);
      Subtorus img = canonicalize(poset.ambient, dir, off);
      auto it = lookup.find(img);
      if (it == lookup.end())
        throw InputError("arrangement is not invariant: element " + std::to_string(el.id) +
                         " maps outside the poset under group element " + std::to_string(g));
      if (input_ids.count(el.id) && !input_ids.count(it->second))
        throw InputError("arrangement is not invariant: input torus " + std::to_string(el.id) +
                         " maps to a non-input element under group element " + std::to_string(g));
      action.image[g][el.id] = it->second;
      if (el.torus.dim() == 0) {
        action.lattice_map[g][el.id] = IntMat(0, 0);
      } else {
        auto x = solve_rows_integer(poset.elements[it->second].torus.direction.basis(), dir);
        if (!x) throw InconsistencyError("direction image is not integral in the target basis");
        action.lattice_map[g][el.id] = *x;
      }
    }
  }
  return action;
}

std::map<std::size_t, std::vector<std::size_t>> poset_orbit_sizes(
    const IntersectionPoset& poset, const FiniteMatrixGroup& group, const PosetAction& action,
    bool translation_free_only) {
  std::vector<std::size_t> acting;
  for (std::size_t g = 0; g < group.order(); ++g)
    if (!translation_free_only || vec_is_zero(group.elements[g].trans)) acting.push_back(g);
  std::vector<bool> seen(poset.elements.size(), false);
  std::map<std::size_t, std::vector<std::size_t>> out;
  for (std::size_t x = 0; x < poset.elements.size(); ++x) {
    if (seen[x]) continue;
    std::vector<std::size_t> stack{x};
    seen[x] = true;
    std::size_t size = 0;
    while (!stack.empty()) {
      std::size_t y = stack.back();
      stack.pop_back();
      ++size;
      for (std::size_t g : acting) {
        std::size_t z = action.image[g][y];
        if (!seen[z]) {
          seen[z] = true;
          stack.push_back(z);
        }
      }
    }
    out[poset.elements[x].torus.dim()].push_back(size);
  }
  for (auto& [d, sizes] : out) std::sort(sizes.begin(), sizes.end(), std::greater<>());
  return out;
}

std::vector<Quad> block_character(const SpectralPage& page, const PosetAction& action,
                                  const SymmetryData& sym, std::size_t p, std::size_t q) {
  std::vector<Quad> chi(sym.table.class_count(), Quad(0));
  if (p >= page.columns()) return chi;
  const auto& chs = page.chains_by_p[p];
  for (std::size_t cl = 0; cl < sym.group.classes.size(); ++cl) {
    std::size_t rep = sym.group.class_rep[cl];
    Int acc = 0;
    for (const Chain& c : chs) {
      bool fixed = true;
      for (std::size_t id : c)
        if (action.image[rep][id] != id) {
          fixed = false;
          break;
        }
      if (fixed) acc += trace(exterior_power(action.lattice_map[rep][c.back()], q));
    }
    chi[sym.class_map[cl]] = Quad(acc);
  }
  return chi;
}

IrrepDecomposition subspace_decomposition(
    const RatMat& rows, const SymmetryData& sym,
    const std::function<RatVec(const RatVec&, std::size_t)>& apply) {
  RatMat basis = row_space_basis(rows);
  if (!basis.rows()) return {};
  // In reduced echelon form the pivot columns carry an identity block, so
  // the trace of the action on the subspace reads off at the pivots.
  std::vector<std::size_t> pivots(basis.rows());
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    std::size_t j = 0;
    while (j < basis.cols() && basis(i, j) == 0) ++j;
    pivots[i] = j;
  }
  std::vector<Quad> chi(sym.table.class_count(), Quad(0));
  for (std::size_t cl = 0; cl < sym.group.classes.size(); ++cl) {
    Rat tr(0);
    for (std::size_t i = 0; i < basis.rows(); ++i) tr += apply(basis.row(i), cl)[pivots[i]];
    chi[sym.class_map[cl]] = Quad(tr);
  }
  return decompose(chi, sym.table);
}

IrrepDecomposition subspace_decomposition_projector(
    const RatMat& rows, const SymmetryData& sym,
    const std::function<RatVec(const RatVec&, std::size_t)>& apply_element) {
  RatMat basis = row_space_basis(rows);
  IrrepDecomposition out;
  if (!basis.rows()) return out;
  const std::size_t r = basis.rows();
  const std::size_t n = basis.cols();
  const std::size_t ord = sym.group.order();
  std::vector<std::vector<RatVec>> img(r, std::vector<RatVec>(ord));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t g = 0; g < ord; ++g) img[i][g] = apply_element(basis.row(i), g);
  for (std::size_t rho = 0; rho < sym.table.irrep_count(); ++rho) {
    QuadMat proj(r, n);
    for (std::size_t g = 0; g < ord; ++g) {
      // Real character tables: chi(g inverse) equals chi(g).
      const Quad& c = sym.table.chi[rho][sym.class_map[sym.group.class_of[g]]];
      if (c.is_zero()) continue;
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
          if (img[i][g][j] != 0) proj(i, j) += c * Quad(img[i][g][j]);
    }
    std::size_t rank = field_rank(proj);
    if (rank % sym.table.degrees[rho])
      throw InconsistencyError("projected rank is not divisible by the degree of " +
                               sym.table.names[rho]);
    if (rank) out.mult[sym.table.names[rho]] = rank / sym.table.degrees[rho];
  }
  return out;
}

std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition> e2_decomposition(
    const SpectralPage& page, const Differentials& d1, const SymmetryData& sym,
    const PosetAction& action) {
  auto dims = e2_dimensions(page, d1);

  // d1 is equivariant iff it commutes with every generator.
  for (std::size_t gen : sym.group.generator_ids) {
    for (const auto& [key, dmat] : d1.maps) {
      if (!dmat.rows() || !dmat.cols()) continue;
      auto [p, q] = key;
      BlockAction src = block_action(page, action, gen, p, q);
      BlockAction tgt = block_action(page, action, gen, p - 1, q);
      auto soff = chain_offsets(page, p, q);
      auto toff = chain_offsets(page, p - 1, q);
      for (std::size_t ci = 0; ci < src.target.size(); ++ci) {
        const IntMat& w = src.fiber[ci];
        for (std::size_t i = 0; i < w.rows(); ++i) {
          IntVec lhs(dmat.cols(), Int(0));
          for (std::size_t j = 0; j < w.cols(); ++j) {
            if (w(i, j) == 0) continue;
            std::size_t srow = soff[src.target[ci]] + j;
            for (std::size_t col = 0; col < dmat.cols(); ++col)
              if (dmat(srow, col) != 0) lhs[col] += w(i, j) * dmat(srow, col);
          }
          IntVec rhs = apply_block(tgt, toff, dmat.row(soff[ci] + i));
          if (lhs != rhs)
            throw InconsistencyError("d1 does not commute with the group action on block (" +
                                     std::to_string(p) + "," + std::to_string(q) + ")");
        }
      }
    }
  }

  std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition> m1;
  for (const auto& [key, dim] : page.dims)
    if (dim) m1[key] = decompose(block_character(page, action, sym, key.first, key.second),
                                 sym.table);

  std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition> image;
  for (const auto& [key, dmat] : d1.maps) {
    if (!dmat.rows() || !dmat.cols()) continue;
    const std::size_t tp = key.first - 1;
    const std::size_t tq = key.second;
    auto toff = chain_offsets(page, tp, tq);
    std::map<std::size_t, BlockAction> cache;
    auto apply = [&, tp, tq](const RatVec& v, std::size_t cls) -> RatVec {
      auto it = cache.find(cls);
      if (it == cache.end())
        it = cache.emplace(cls, block_action(page, action, sym.group.class_rep[cls], tp, tq))
                 .first;
      return apply_block(it->second, toff, v);
    };
    IrrepDecomposition content = subspace_decomposition(to_rat(dmat), sym, apply);
    if (!content.mult.empty()) image[key] = std::move(content);
  }

  std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition> e2;
  for (const auto& [key, content] : m1) {
    auto [p, q] = key;
    IrrepDecomposition val = content;
    auto out_it = image.find(key);
    if (out_it != image.end()) val = irrep_sub(val, out_it->second);
    auto in_it = image.find({p + 1, q});
    if (in_it != image.end()) val = irrep_sub(val, in_it->second);
    std::size_t want = dims.count(key) ? dims.at(key) : 0;
    if (val.total(sym.table) != want)
      throw InconsistencyError("equivariant content of E2(" + std::to_string(p) + "," +
                               std::to_string(q) + ") does not match its dimension");
    if (!val.mult.empty()) e2[key] = std::move(val);
  }
  return e2;
}

bool d2_vanishing_test(
    const std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition>& e2) {
  for (const auto& [skey, source] : e2)
    for (std::size_t r = 2; r <= skey.first; ++r) {
      auto it = e2.find({skey.first - r, skey.second + r - 1});
      if (it == e2.end()) continue;
      for (const auto& [name, mult] : source.mult)
        if (it->second.mult.count(name)) return false;
    }
  return true;
}

CollapseAssist make_collapse_assist(
    const std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition>& e2) {
  CollapseAssist assist;
  for (const auto& [key, content] : e2)
    for (const auto& [name, mult] : content.mult) assist.support[key].insert(name);
  return assist;
}

IrrepDecomposition wedge_decomposition(const SymmetryData& sym, std::size_t q) {
  std::vector<Quad> chi(sym.table.class_count(), Quad(0));
  for (std::size_t cl = 0; cl < sym.group.classes.size(); ++cl) {
    const IntMat& m = sym.group.elements[sym.group.class_rep[cl]].mat;
    chi[sym.class_map[cl]] = Quad(trace(exterior_power(m, q)));
  }
  return decompose(chi, sym.table);
}

IrrepDecomposition alpha_image_decomposition(const IntersectionPoset& poset,
                                             const SymmetryData& sym, std::size_t q) {
  std::size_t n = binom(poset.ambient, q);
  if (!n) return {};
  std::vector<RatVec> rows;
  for (const auto& el : poset.elements) {
    if (el.torus.dim() < q) continue;
    IntMat w = exterior_power(el.torus.direction.basis(), q);
    for (std::size_t i = 0; i < w.rows(); ++i) {
      RatVec r(n);
      for (std::size_t j = 0; j < n; ++j) r[j] = Rat(w(i, j));
      rows.push_back(std::move(r));
    }
  }
  if (q == 1)
    for (const IntVec& loop : loop_generators(poset)) rows.push_back(to_rat(loop));
  if (rows.empty()) return {};
  RatMat mat(rows.size(), n);
  for (std::size_t i = 0; i < rows.size(); ++i) mat.set_row(i, rows[i]);

  std::vector<RatMat> compound(sym.group.classes.size());
  for (std::size_t cl = 0; cl < sym.group.classes.size(); ++cl)
    compound[cl] =
        to_rat(exterior_power(sym.group.elements[sym.group.class_rep[cl]].mat, q));
  auto apply = [&](const RatVec& v, std::size_t cls) -> RatVec {
    return mul_row(v, compound[cls]);
  };
  return subspace_decomposition(mat, sym, apply);
}

std::map<std::size_t, AlphaAssist> make_alpha_assists(
    const SymmetryData& sym,
    const std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition>& e2,
    std::size_t ambient) {
  std::map<std::size_t, AlphaAssist> out;
  for (std::size_t q = 0; q <= ambient; ++q) {
    AlphaAssist a;
    for (std::size_t rho = 0; rho < sym.table.irrep_count(); ++rho)
      a.degree[sym.table.names[rho]] = sym.table.degrees[rho];
    IrrepDecomposition hq;
    for (const auto& [key, content] : e2)
      if (key.first + key.second == q) hq = irrep_add(hq, content);
    a.mult_hq = hq.mult;
    a.mult_wedge = wedge_decomposition(sym, q).mult;
    out[q] = std::move(a);
  }
  return out;
}

IrrepDecomposition irrep_add(const IrrepDecomposition& a, const IrrepDecomposition& b) {
  IrrepDecomposition r = a;
  for (const auto& [name, mult] : b.mult) r.mult[name] += mult;
  return r;
}

IrrepDecomposition irrep_sub(const IrrepDecomposition& a, const IrrepDecomposition& b) {
  IrrepDecomposition r = a;
  for (const auto& [name, mult] : b.mult) {
    auto it = r.mult.find(name);
    if (it == r.mult.end() || it->second < mult)
      throw InconsistencyError("irrep multiplicity of " + name + " would become negative");
    it->second -= mult;
    if (!it->second) r.mult.erase(it);
  }
  return r;
}

EquivariantReport equivariant_report(const IntersectionPoset& poset, const SpectralPage& page,
                                     const Differentials& d1, const SymmetryData& sym) {
  EquivariantReport rep;
  PosetAction action = act_on_poset(poset, sym.group);
  rep.orbits = poset_orbit_sizes(poset, sym.group, action, false);
  rep.orbits_rotational = poset_orbit_sizes(poset, sym.group, action, true);
  rep.e2 = e2_decomposition(page, d1, sym, action);
  rep.collapse = d2_vanishing_test(rep.e2);
  CollapseAssist assist = make_collapse_assist(rep.e2);
  auto alpha_assists = make_alpha_assists(sym, rep.e2, poset.ambient);
  rep.complement = complement_report(poset, page, d1, &assist, &alpha_assists);

  const std::size_t big = poset.ambient;
  rep.wedge.resize(big + 1);
  for (std::size_t q = 0; q <= big; ++q) rep.wedge[q] = wedge_decomposition(sym, q);
  rep.h_union.resize(page.max_dim + 1);
  for (const auto& [key, content] : rep.e2)
    rep.h_union[key.first + key.second] =
        irrep_add(rep.h_union[key.first + key.second], content);

  if (!rep.collapse || !rep.complement.exact) return rep;
  for (std::size_t q = 0; q <= page.max_dim; ++q)
    if (rep.h_union[q].total(sym.table) != rep.complement.betti_a.b[q])
      throw InconsistencyError("union content does not match its betti number in degree " +
                               std::to_string(q));

  std::vector<IrrepDecomposition> span(big + 1);
  for (std::size_t q = 0; q <= big; ++q) span[q] = alpha_image_decomposition(poset, sym, q);
  rep.im_beta.resize(big + 1);
  for (std::size_t deg = 0; deg <= big; ++deg) {
    rep.im_beta[deg] = irrep_sub(rep.wedge[deg], det_twist(span[big - deg], sym));
    if (rep.im_beta[deg].total(sym.table) != rep.complement.c[deg].lower)
      throw InconsistencyError("restriction image content does not match its rank in degree " +
                               std::to_string(deg));
  }
  rep.h_complement.resize(big);
  for (std::size_t deg = 1; deg <= big; ++deg) {
    IrrepDecomposition kernel;
    if (big - deg <= page.max_dim)
      kernel = irrep_sub(rep.h_union[big - deg], span[big - deg]);
    rep.h_complement[deg - 1] = irrep_add(rep.im_beta[deg - 1], kernel);
    if (rep.h_complement[deg - 1].total(sym.table) != rep.complement.betti[deg - 1])
      throw InconsistencyError("complement content does not match its betti number in degree " +
                               std::to_string(deg - 1));
  }
  rep.assembled = true;
  return rep;
}

}  // namespace torcoh
