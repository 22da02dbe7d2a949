#include "torcoh/catalog.hpp"

#include <utility>

#include "torcoh/complement.hpp"
#include "torcoh/errors.hpp"

namespace torcoh {
namespace {

IrrepDecomposition irr(std::map<std::string, std::size_t> m) {
  IrrepDecomposition d;
  d.mult = std::move(m);
  return d;
}

constexpr const char* kAmmannBeenkerText = R"(# Octagonal pattern: four 2-tori in T^4 through the origin.
ambient 4
torus t1 basis [1,0,0,0; 0,1,0,-1] offset (0,0,0,0)
torus t2 basis [0,1,0,0; 1,0,1,0] offset (0,0,0,0)
torus t3 basis [0,0,1,0; 0,1,0,1] offset (0,0,0,0)
torus t4 basis [0,0,0,1; -1,0,1,0] offset (0,0,0,0)
)";

// Identical to ammann_beenker except for the sign in t2's second basis
// vector. With this variant t2 and t4 share a direction, their
// intersection is 1-dimensional, and the expected octagonal results fail;
// see the README on the deliberately shipped defect.
constexpr const char* kAmmannBeenkerVariantText = R"(# Octagonal pattern, defective t2 variant.
ambient 4
torus t1 basis [1,0,0,0; 0,1,0,-1] offset (0,0,0,0)
torus t2 basis [0,1,0,0; 1,0,-1,0] offset (0,0,0,0)
torus t3 basis [0,0,1,0; 0,1,0,1] offset (0,0,0,0)
torus t4 basis [0,0,0,1; -1,0,1,0] offset (0,0,0,0)
)";

// Five 2-tori through the origin in T^4 with pairwise unimodular direction
// sums, so every pair meets exactly once. The directions are the five
// rotates of span{1, z + z^4} under multiplication by z in Z[z]/(z^4 + z^3
// + z^2 + z + 1), written in the basis 1, z, z^2, z^3.
constexpr const char* kPenroseSpecialText = R"(# Fivefold pattern, special offset class: five 2-tori through one point.
ambient 4
torus t1 basis [1,0,0,0; -1,0,-1,-1] offset (0,0,0,0)
torus t2 basis [0,1,0,0; 1,0,1,0] offset (0,0,0,0)
torus t3 basis [0,0,1,0; 0,1,0,1] offset (0,0,0,0)
torus t4 basis [0,0,0,1; -1,-1,0,-1] offset (0,0,0,0)
torus t5 basis [-1,-1,-1,-1; 1,0,0,1] offset (0,0,0,0)
)";

// The fifteen 4-tori fixed by no rotation but swept by the icosahedral
// group: left kernels of (R + Id) over the fifteen 2-fold rotations R.
// Generators: a 5-fold and a 2-fold signed permutation plus the central
// half-shift, generating a group of order 120.
constexpr const char* kAmmannKramerText = R"(# Icosahedral pattern: fifteen 4-tori in T^6 with full symmetry group.
ambient 6
torus t1 basis [1,-1,0,0,0,0; 0,0,1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,1,-1] offset (0,0,0,0,0,0)
torus t2 basis [1,0,0,0,0,-1; 0,1,0,-1,0,0; 0,0,1,0,0,0; 0,0,0,0,1,0] offset (0,0,0,0,0,0)
torus t3 basis [1,0,1,0,0,0; 0,1,0,0,0,-1; 0,0,0,1,0,0; 0,0,0,0,1,0] offset (0,0,0,0,0,0)
torus t4 basis [1,0,0,1,0,0; 0,1,0,0,-1,0; 0,0,1,0,0,0; 0,0,0,0,0,1] offset (0,0,0,0,0,0)
torus t5 basis [1,0,0,0,-1,0; 0,1,-1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,0,1] offset (0,0,0,0,0,0)
torus t6 basis [1,0,-1,0,0,0; 0,1,0,0,0,0; 0,0,0,1,-1,0; 0,0,0,0,0,1] offset (0,0,0,0,0,0)
torus t7 basis [1,0,0,-1,0,0; 0,1,0,0,0,0; 0,0,1,0,0,-1; 0,0,0,0,1,0] offset (0,0,0,0,0,0)
torus t8 basis [1,0,0,0,0,0; 0,1,1,0,0,0; 0,0,0,1,0,1; 0,0,0,0,1,0] offset (0,0,0,0,0,0)
torus t9 basis [1,0,0,0,0,0; 0,1,0,1,0,0; 0,0,1,0,1,0; 0,0,0,0,0,1] offset (0,0,0,0,0,0)
torus t10 basis [1,0,0,0,0,1; 0,1,0,0,0,0; 0,0,1,0,-1,0; 0,0,0,1,0,0] offset (0,0,0,0,0,0)
torus t11 basis [1,1,0,0,0,0; 0,0,1,-1,0,0; 0,0,0,0,1,0; 0,0,0,0,0,1] offset (0,0,0,0,0,0)
torus t12 basis [1,0,0,0,1,0; 0,1,0,0,0,0; 0,0,1,0,0,0; 0,0,0,1,0,-1] offset (0,0,0,0,0,0)
torus t13 basis [1,0,0,0,0,0; 0,1,0,0,1,0; 0,0,1,0,0,1; 0,0,0,1,0,0] offset (0,0,0,0,0,0)
torus t14 basis [1,0,0,0,0,0; 0,1,0,0,0,1; 0,0,1,0,0,0; 0,0,0,1,1,0] offset (0,0,0,0,0,0)
torus t15 basis [1,0,0,0,0,0; 0,1,0,0,0,0; 0,0,1,1,0,0; 0,0,0,0,1,1] offset (0,0,0,0,0,0)
group generator [1,0,0,0,0,0; 0,0,0,0,1,0; 0,0,0,1,0,0; 0,0,0,0,0,1; 0,0,1,0,0,0; 0,1,0,0,0,0]
group generator [0,1,0,0,0,0; 1,0,0,0,0,0; 0,0,-1,0,0,0; 0,0,0,-1,0,0; 0,0,0,0,0,1; 0,0,0,0,1,0]
group generator [1,0,0,0,0,0; 0,1,0,0,0,0; 0,0,1,0,0,0; 0,0,0,1,0,0; 0,0,0,0,1,0; 0,0,0,0,0,1] offset (1/2,1/2,1/2,1/2,1/2,1/2)
)";

CatalogEntry make_ammann_beenker() {
  CatalogEntry e;
  e.name = "ammann_beenker";
  e.geometric = true;
  e.text = kAmmannBeenkerText;
  e.expected.ambient = 4;
  e.expected.m = 4;
  e.expected.p = 1;
  e.expected.census = {{2, 4}, {0, 3}};
  e.expected.n_k = {{2, 2}, {4, 1}};
  e.expected.c2 = 3;
  e.expected.betti_union = {1, 10, 4};
  e.expected.betti_complement = {1, 5, 9, 0};
  return e;
}

CatalogEntry make_ammann_beenker_variant() {
  CatalogEntry e = make_ammann_beenker();
  e.name = "ammann_beenker_variant";
  e.negative_control = true;
  e.text = kAmmannBeenkerVariantText;
  return e;
}

CatalogEntry make_penrose_special() {
  CatalogEntry e;
  e.name = "penrose_special";
  e.geometric = true;
  e.text = kPenroseSpecialText;
  e.expected.ambient = 4;
  e.expected.m = 5;
  e.expected.p = 1;
  e.expected.census = {{2, 5}, {0, 1}};
  e.expected.n_k = {{5, 1}};
  e.expected.c2 = 2;
  e.expected.betti_union = {1, 10, 5};
  e.expected.betti_complement = {1, 5, 8, 0};
  return e;
}

CatalogEntry make_combinatorial(std::string name, std::size_t m,
                                std::map<std::size_t, std::size_t> n_k, std::size_t c2,
                                std::vector<std::size_t> betti_complement) {
  CatalogEntry e;
  e.name = std::move(name);
  e.expected.ambient = 4;
  e.expected.m = m;
  e.expected.p = 1;
  e.expected.n_k = std::move(n_k);
  e.expected.c2 = c2;
  e.expected.betti_complement = std::move(betti_complement);
  return e;
}

CatalogEntry make_ammann_kramer() {
  CatalogEntry e;
  e.name = "ammann_kramer";
  e.geometric = true;
  e.text = kAmmannKramerText;
  e.expected.ambient = 6;
  e.expected.m = 15;
  e.expected.p = 1;
  e.expected.census = {{4, 15}, {2, 46}, {0, 32}};
  e.expected.n_k = {{3, 30}, {15, 2}};
  e.expected.betti_union = {1, 6, 194, 84, 15};
  e.expected.betti_complement = {1, 12, 72, 181, 0, 0};
  e.expected.orbits_rotational = {{4, {15}}, {2, {15, 15, 10, 6}}, {0, {15, 15, 1, 1}}};
  e.expected.orbits_full = {{4, {15}}, {2, {30, 10, 6}}, {0, {30, 2}}};
  e.expected.e2 = {
      {{0, 0}, irr({{"A", 1}})},
      {{0, 1}, irr({{"T1", 1}, {"T2", 1}})},
      {{0, 2}, irr({{"A", 1}, {"T1", 2}, {"T2", 2}, {"G", 3}, {"H", 3}})},
      {{0, 3}, irr({{"T1", 4}, {"T2", 4}, {"G", 4}, {"H", 4}})},
      {{0, 4}, irr({{"A", 1}, {"G", 1}, {"H", 2}})},
      {{1, 1}, irr({{"T1", 3}, {"T1'", 2}, {"T2", 3}, {"T2'", 2}, {"G", 4}, {"G'", 2},
                    {"H", 6}, {"H'", 2}})},
      {{1, 2}, irr({{"A'", 1}, {"G", 1}, {"G'", 1}, {"H", 1}, {"H'", 2}})},
      {{2, 0}, irr({{"A", 1}, {"A'", 1}, {"T1'", 2}, {"T2'", 2}, {"G", 1}, {"G'", 3},
                    {"H", 2}, {"H'", 4}})},
  };
  e.expected.h_torus = {
      irr({{"A", 1}}),
      irr({{"T1", 1}, {"T2", 1}}),
      irr({{"T1", 1}, {"T2", 1}, {"G", 1}, {"H", 1}}),
      irr({{"A", 2}, {"G", 2}, {"H", 2}}),
      irr({{"T1", 1}, {"T2", 1}, {"G", 1}, {"H", 1}}),
      irr({{"T1", 1}, {"T2", 1}}),
      irr({{"A", 1}}),
  };
  e.expected.im_beta = {
      irr({{"A", 1}}),
      irr({{"T1", 1}, {"T2", 1}}),
      irr({{"T1", 1}, {"T2", 1}}),
      irr({{"A", 2}}),
      irr({}),
      irr({}),
      irr({}),
  };
  e.expected.h_complement = {
      irr({{"A", 1}}),
      irr({{"A", 1}, {"T1", 1}, {"T2", 1}, {"H", 1}}),
      irr({{"A'", 1}, {"T1", 5}, {"T2", 5}, {"G", 3}, {"G'", 1}, {"H", 3}, {"H'", 2}}),
      irr({{"A", 4}, {"A'", 1}, {"T1", 4}, {"T1'", 4}, {"T2", 4}, {"T2'", 4}, {"G", 7},
           {"G'", 5}, {"H", 10}, {"H'", 6}}),
      irr({}),
      irr({}),
  };
  return e;
}

const std::vector<CatalogEntry>& all_entries() {
  static const std::vector<CatalogEntry> entries = [] {
    std::vector<CatalogEntry> v;
    v.push_back(make_ammann_beenker());
    v.push_back(make_combinatorial("ammann_beenker_decorated", 8, {{2, 6}, {4, 1}, {8, 1}}, 2,
                                   {1, 8, 23, 0}));
    v.push_back(make_penrose_special());
    v.push_back(make_combinatorial("penrose_generic", 10, {{2, 10}, {4, 5}}, 2, {1, 10, 34, 0}));
    v.push_back(make_combinatorial("dodecagonal", 6, {{2, 9}, {3, 4}, {6, 1}}, 3, {1, 7, 28, 0}));
    v.push_back(make_combinatorial("dodecagonal_decorated", 12, {{2, 12}, {3, 8}, {4, 3}, {12, 1}},
                                   2, {1, 12, 59, 0}));
    v.push_back(make_ammann_kramer());
    v.push_back(make_ammann_beenker_variant());
    return v;
  }();
  return entries;
}

}  // namespace

ArrangementInput CatalogEntry::parse() const {
  if (!geometric) throw InputError("entry '" + name + "' is combinatorial and has no geometry");
  return parse_arrangement_file(text, name);
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> names;
  for (const CatalogEntry& e : all_entries()) names.push_back(e.name);
  return names;
}

const CatalogEntry& catalog_get(const std::string& name) {
  for (const CatalogEntry& e : all_entries())
    if (e.name == name) return e;
  throw InputError("unknown catalog entry '" + name + "'");
}

std::vector<std::size_t> combinatorial_complement(std::size_t m, std::size_t p,
                                                  const std::map<std::size_t, std::size_t>& n_k,
                                                  std::size_t c2) {
  std::vector<std::size_t> betti_a = betti_2d_closed_form(m, p, n_k);
  betti_a.resize(5, 0);
  auto exact = [](std::size_t v) {
    RankInterval r;
    r.lower = r.upper = v;
    r.exact = true;
    return r;
  };
  // The union is 2-dimensional and its direction planes span, so the only
  // nontrivial restriction rank is in degree 2.
  std::vector<RankInterval> c = {exact(1), exact(4), exact(c2), exact(0), exact(0)};
  return betti_complement(betti_a, c, 4);
}

}  // namespace torcoh
