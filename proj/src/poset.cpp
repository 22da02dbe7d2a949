#include "torcoh/poset.hpp"

#include <algorithm>
#include <numeric>

#include "torcoh/errors.hpp"

namespace torcoh {

namespace {

std::size_t find_root(std::vector<std::size_t>& up, std::size_t i) {
  while (up[i] != i) {
    up[i] = up[up[i]];
    i = up[i];
  }
  return i;
}

}  // namespace

IntersectionPoset build_poset(const Arrangement& arr) {
  if (arr.tori.empty()) throw InputError("build_poset: empty arrangement");
  std::size_t n = arr.ambient;
  std::vector<Subtorus> inputs;
  for (const Subtorus& t : arr.tori) {
    if (t.ambient != n) throw InputError("build_poset: mixed ambient dimensions");
    Subtorus c = canonicalize(n, t.direction.basis(), t.offset);
    if (std::find(inputs.begin(), inputs.end(), c) == inputs.end()) inputs.push_back(c);
  }

  std::vector<Subtorus> elems = inputs;
  for (std::size_t a = 1; a < elems.size(); ++a)
    for (std::size_t b = 0; b < a; ++b)
      for (const Subtorus& comp : intersect(elems[a], elems[b]))
        if (std::find(elems.begin(), elems.end(), comp) == elems.end()) elems.push_back(comp);
  std::sort(elems.begin(), elems.end(), subtorus_less);

  IntersectionPoset poset;
  poset.ambient = n;
  poset.name = arr.name;
  poset.input_tori = inputs;
  std::size_t m = elems.size();
  poset.elements.resize(m);
  poset.below.assign(m, std::vector<bool>(m, false));
  for (std::size_t i = 0; i < m; ++i) {
    poset.elements[i].torus = elems[i];
    poset.elements[i].id = i;
    for (std::size_t k = 0; k < inputs.size(); ++k)
      if (contains_torus(inputs[k], elems[i])) poset.elements[i].parents.push_back(k);
    if (poset.elements[i].parents.empty())
      throw InconsistencyError("poset element outside every input torus");
  }
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j)
      poset.below[i][j] =
          i != j && !(elems[i] == elems[j]) && contains_torus(elems[i], elems[j]);

  std::vector<std::size_t> up(m);
  std::iota(up.begin(), up.end(), 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j)
      if (poset.below[i][j] || poset.below[j][i]) up[find_root(up, i)] = find_root(up, j);
  std::size_t roots = 0;
  for (std::size_t i = 0; i < m; ++i) roots += find_root(up, i) == i ? 1 : 0;
  poset.component_count = roots;
  return poset;
}

namespace {

void extend_chain(const IntersectionPoset& poset, std::size_t target, Chain& cur,
                  std::vector<Chain>& out) {
  if (cur.size() == target) {
    out.push_back(cur);
    return;
  }
  for (std::size_t j = cur.back() + 1; j < poset.elements.size(); ++j) {
    if (!poset.less(cur.back(), j)) continue;
    cur.push_back(j);
    extend_chain(poset, target, cur, out);
    cur.pop_back();
  }
}

}  // namespace

std::vector<Chain> chains(const IntersectionPoset& poset, std::size_t p) {
  std::vector<Chain> out;
  Chain cur;
  for (std::size_t i = 0; i < poset.elements.size(); ++i) {
    cur.assign(1, i);
    extend_chain(poset, p + 1, cur, out);
  }
  return out;
}

std::size_t components(const IntersectionPoset& poset) { return poset.component_count; }

std::map<std::size_t, std::size_t> dimension_census(const IntersectionPoset& poset) {
  std::map<std::size_t, std::size_t> census;
  for (const PosetElement& e : poset.elements) ++census[e.torus.dim()];
  return census;
}

std::map<std::size_t, std::size_t> point_multiplicities(const IntersectionPoset& poset) {
  std::map<std::size_t, std::size_t> mult;
  for (const PosetElement& e : poset.elements)
    if (e.torus.dim() == 0) ++mult[e.parents.size()];
  return mult;
}

}  // namespace torcoh
