#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "torcoh/arrfile.hpp"
#include "torcoh/group.hpp"

namespace torcoh {

// Pinned results for one catalog entry; fields are empty where the entry
// does not pin them. Equivariant tables appear only on the icosahedral
// entry. Orbit fixtures come in two flavors because the half-shift merges
// orbits: rotational counts use the translation-free subgroup.
struct ExpectedResults {
  std::size_t ambient = 0;
  std::size_t m = 0;
  std::size_t p = 0;
  std::map<std::size_t, std::size_t> census;       // dim -> element count
  std::map<std::size_t, std::size_t> n_k;          // points on exactly k inputs
  std::optional<std::size_t> c2;
  std::vector<std::size_t> betti_union;
  std::vector<std::size_t> betti_complement;
  std::map<std::size_t, std::vector<std::size_t>> orbits_rotational;
  std::map<std::size_t, std::vector<std::size_t>> orbits_full;
  std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition> e2;
  std::vector<IrrepDecomposition> h_torus;         // wedge contents, degree 0..N
  std::vector<IrrepDecomposition> im_beta;         // degree 0..N
  std::vector<IrrepDecomposition> h_complement;    // degree 0..N-1
};

struct CatalogEntry {
  std::string name;
  bool geometric = false;
  // Ships a documented defect on purpose; excluded from `verify --all`.
  bool negative_control = false;
  std::string text;  // arrangement file source, geometric entries only
  ExpectedResults expected;

  // Parses the stored text; throws InputError on combinatorial entries.
  ArrangementInput parse() const;
};

std::vector<std::string> catalog_names();

// Throws InputError for unknown names.
const CatalogEntry& catalog_get(const std::string& name);

// Complement Betti numbers of an arrangement of m 2-tori in T^4 with p
// components, point intersections counted by n_k, and the given c2, via
// the closed form for the union and the split exact sequence. Assumes the
// direction planes span Q^4, as they do for every catalog pattern.
std::vector<std::size_t> combinatorial_complement(std::size_t m, std::size_t p,
                                                  const std::map<std::size_t, std::size_t>& n_k,
                                                  std::size_t c2);

}  // namespace torcoh
