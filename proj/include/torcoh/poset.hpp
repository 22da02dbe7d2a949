#pragma once

#include <map>
#include <string>
#include <vector>

#include "torcoh/subtorus.hpp"

namespace torcoh {

// One element of the intersection poset. parents lists the indices of the
// arrangement's input tori whose torus contains this one; for an input
// torus that includes its own index.
struct PosetElement {
  Subtorus torus;
  std::size_t id = 0;
  std::vector<std::size_t> parents;
};

// A strictly increasing chain of element ids; increasing in the poset
// order means strictly decreasing tori, so the last id names the deepest
// (smallest) torus of the chain.
using Chain = std::vector<std::size_t>;

// The arrangement closed under componentwise intersection, ordered by
// reverse inclusion: less(i, j) holds iff torus_j is strictly contained in
// torus_i. Elements are numbered canonically (dimension descending, then
// basis, then offset), which makes every chain id-increasing.
struct IntersectionPoset {
  std::size_t ambient = 0;
  std::string name;
  std::vector<PosetElement> elements;
  std::vector<Subtorus> input_tori;
  std::vector<std::vector<bool>> below;
  std::size_t component_count = 0;

  bool less(std::size_t i, std::size_t j) const { return below[i][j]; }
};

// Closes the arrangement under pairwise componentwise intersection and
// assembles the order data. Duplicate input tori are collapsed.
IntersectionPoset build_poset(const Arrangement& arr);

// All strictly increasing (p+1)-tuples, lexicographically sorted.
std::vector<Chain> chains(const IntersectionPoset& poset, std::size_t p);

// Number of connected components of the union, via union-find over
// comparable element pairs.
std::size_t components(const IntersectionPoset& poset);

// Count of elements per torus dimension.
std::map<std::size_t, std::size_t> dimension_census(const IntersectionPoset& poset);

// For each 0-dimensional element, the number of input tori through it;
// returns the map k -> number of points lying on exactly k input tori.
std::map<std::size_t, std::size_t> point_multiplicities(const IntersectionPoset& poset);

}  // namespace torcoh
