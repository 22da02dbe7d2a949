#pragma once

#include <map>
#include <set>
#include <utility>
#include <vector>

#include "torcoh/poset.hpp"

namespace torcoh {

// First page of the Mayer-Vietoris spectral sequence of the simplicial
// resolution. Column p is indexed by the (p+1)-chains of the poset; the
// fiber over a chain is the homology of its deepest torus, with basis the
// lexicographic q-subsets of the torus's HNF lattice basis rows. Block
// (p,q) concatenates the chain fibers in chain order.
struct SpectralPage {
  std::size_t max_dim = 0;
  std::vector<std::vector<Chain>> chains_by_p;
  std::vector<std::vector<std::size_t>> deepest_dim;
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> dims;

  std::size_t dim(std::size_t p, std::size_t q) const {
    auto it = dims.find({p, q});
    return it == dims.end() ? 0 : it->second;
  }
  std::size_t columns() const { return chains_by_p.size(); }
};

// The d1 differentials, one integer matrix per nonempty source block.
// maps.at({p,q}) sends row vectors of E1_{p,q} to E1_{p-1,q}.
struct Differentials {
  std::map<std::pair<std::size_t, std::size_t>, IntMat> maps;

  const IntMat* at(std::size_t p, std::size_t q) const {
    auto it = maps.find({p, q});
    return it == maps.end() ? nullptr : &it->second;
  }
};

// Irrep content of each E2 block, supplied by the equivariant layer. The
// differentials commute with the group action, so two blocks with disjoint
// content admit only the zero map between them.
struct CollapseAssist {
  std::map<std::pair<std::size_t, std::size_t>, std::set<std::string>> support;
};

enum class CollapseCertificate {
  two_columns,
  d2_zero_by_support,
  d2_zero_by_symmetry,
  unresolved
};

// Betti numbers of the union. When the certificate is unresolved, b holds
// the E2 upper bounds and lower the bounds after maximal higher
// differentials; otherwise lower == b and the values are exact.
struct BettiVector {
  std::vector<std::size_t> b;
  std::vector<std::size_t> lower;
  CollapseCertificate certificate = CollapseCertificate::two_columns;
};

SpectralPage build_e1(const IntersectionPoset& poset);

Differentials build_d1(const SpectralPage& page, const IntersectionPoset& poset);

// Start offset of each chain's fiber inside block (p,q).
std::vector<std::size_t> chain_offsets(const SpectralPage& page, std::size_t p, std::size_t q);

// (chain index, wedge subset index) of one E1 basis vector.
std::pair<std::size_t, std::size_t> basis_label(const SpectralPage& page, std::size_t p,
                                                std::size_t q, std::size_t index);

// Dimensions of the E2 page blocks over Q (only nonzero entries).
std::map<std::pair<std::size_t, std::size_t>, std::size_t> e2_dimensions(
    const SpectralPage& page, const Differentials& d1);

BettiVector compute_betti(const SpectralPage& page, const Differentials& d1,
                          const CollapseAssist* assist = nullptr);

// Independent closed form for arrangements of m 2-tori with p components
// whose pairwise intersections are points, n_k of them lying on exactly k
// input tori; returns (b0, b1, b2).
std::vector<std::size_t> betti_2d_closed_form(std::size_t m, std::size_t p,
                                              const std::map<std::size_t, std::size_t>& n_k);

// Nontrivial invariant factors of each d1 matrix, keyed by source block;
// diagnostic for integral torsion that rational ranks cannot see.
std::map<std::pair<std::size_t, std::size_t>, std::vector<Int>> torsion_diagnostics(
    const Differentials& d1);

}  // namespace torcoh
