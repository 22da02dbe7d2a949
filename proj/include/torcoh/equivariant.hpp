#pragma once

#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "torcoh/complement.hpp"
#include "torcoh/group.hpp"

namespace torcoh {

// Permutation action of a symmetry group on the intersection poset.
// image[g][x] is the id of element x mapped by group element g, and
// lattice_map[g][x] is the unimodular X with X * B_image = B_x * M_g,
// expressing the mapped direction basis in the image's basis.
struct PosetAction {
  std::vector<std::vector<std::size_t>> image;
  std::vector<std::vector<IntMat>> lattice_map;
};

// Checks that every group element permutes the input tori and the closed
// poset, naming the first failing (element, group element) pair otherwise,
// and assembles the action.
PosetAction act_on_poset(const IntersectionPoset& poset, const FiniteMatrixGroup& group);

// Orbit sizes of the poset elements of each dimension, sorted descending.
// With translation_free_only, only the group elements with zero
// translation part act.
std::map<std::size_t, std::vector<std::size_t>> poset_orbit_sizes(
    const IntersectionPoset& poset, const FiniteMatrixGroup& group, const PosetAction& action,
    bool translation_free_only = false);

// Character of the action on E1_{p,q}, indexed by table column: each class
// representative receives the sum, over its fixed (p+1)-chains, of the
// trace of the q-th compound of its lattice map on the chain's deepest
// element.
std::vector<Quad> block_character(const SpectralPage& page, const PosetAction& action,
                                  const SymmetryData& sym, std::size_t p, std::size_t q);

// Irrep content of the invariant subspace spanned by `rows` (dependent
// rows allowed). apply(v, cls) must return the image of the row vector v
// under the representative of group class cls.
IrrepDecomposition subspace_decomposition(
    const RatMat& rows, const SymmetryData& sym,
    const std::function<RatVec(const RatVec&, std::size_t)>& apply);

// Cross-check variant via isotypic projectors summed over the whole group:
// multiplicity = rank of the projected span over the character field,
// divided by the irrep degree. apply_element(v, g) must return the image
// of v under group element g.
IrrepDecomposition subspace_decomposition_projector(
    const RatMat& rows, const SymmetryData& sym,
    const std::function<RatVec(const RatVec&, std::size_t)>& apply_element);

// Irrep content of every nonzero E2 block. Verifies that each d1 block
// commutes with the action of every group generator and that each content
// reproduces the non-equivariant block dimension.
std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition> e2_decomposition(
    const SpectralPage& page, const Differentials& d1, const SymmetryData& sym,
    const PosetAction& action);

// True when every dimension-admissible higher differential d_r (r >= 2)
// connects blocks of disjoint irrep content, so the sequence collapses at
// E2.
bool d2_vanishing_test(
    const std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition>& e2);

// Support sets of the decomposition, in the form compute_betti consumes.
CollapseAssist make_collapse_assist(
    const std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition>& e2);

// Content of wedge^q of the defining representation, i.e. of H_q(T^N).
IrrepDecomposition wedge_decomposition(const SymmetryData& sym, std::size_t q);

// Irrep content of the image of H_q of the union in H_q(T^N): the span of
// the q-th compound rows of all direction bases of dimension >= q, plus
// the loop classes at q = 1, inside wedge^q(Z^N) tensor Q.
IrrepDecomposition alpha_image_decomposition(const IntersectionPoset& poset,
                                             const SymmetryData& sym, std::size_t q);

// Equivariant upper bounds for the inclusion ranks, keyed by homological
// degree q.
std::map<std::size_t, AlphaAssist> make_alpha_assists(
    const SymmetryData& sym,
    const std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition>& e2,
    std::size_t ambient);

// Componentwise sum and difference of multiplicities; a difference below
// zero signals an inconsistent assembly and throws InconsistencyError.
IrrepDecomposition irrep_add(const IrrepDecomposition& a, const IrrepDecomposition& b);
IrrepDecomposition irrep_sub(const IrrepDecomposition& a, const IrrepDecomposition& b);

// The full equivariant pipeline for a symmetric arrangement. The betti
// numbers in `complement` use the collapse and inclusion-rank assists.
// When the sequence collapses and every rank is exact, `assembled` is set
// and the irrep content of the long exact sequence is filled in:
// h_union[q] is H_q of the union, wedge[n] is H_n(T^N) (equally H^n),
// im_beta[n] the image of restriction in degree n, h_complement[n] the
// complement cohomology in degree n.
struct EquivariantReport {
  std::map<std::size_t, std::vector<std::size_t>> orbits;
  std::map<std::size_t, std::vector<std::size_t>> orbits_rotational;
  std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition> e2;
  bool collapse = false;
  ComplementReport complement;
  std::vector<IrrepDecomposition> h_union;
  std::vector<IrrepDecomposition> wedge;
  std::vector<IrrepDecomposition> im_beta;
  std::vector<IrrepDecomposition> h_complement;
  bool assembled = false;
};

EquivariantReport equivariant_report(const IntersectionPoset& poset, const SpectralPage& page,
                                     const Differentials& d1, const SymmetryData& sym);

}  // namespace torcoh
