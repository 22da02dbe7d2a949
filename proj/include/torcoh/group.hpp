#pragma once

#include <map>
#include <string>
#include <vector>

#include "torcoh/matrix.hpp"

namespace torcoh {

// An affine lattice symmetry of T^N acting on row vectors as
// x -> x*mat + trans, with trans reduced modulo Z^N. mat is unimodular.
struct GroupElement {
  IntMat mat;
  RatVec trans;
};

GroupElement identity_element(std::size_t ambient);
GroupElement compose(const GroupElement& a, const GroupElement& b);  // apply a, then b
GroupElement inverse(const GroupElement& e);
bool element_equal(const GroupElement& a, const GroupElement& b);
bool element_less(const GroupElement& a, const GroupElement& b);

// A finite group of affine lattice symmetries, closed under composition,
// with its conjugacy class partition.
struct FiniteMatrixGroup {
  std::size_t ambient = 0;
  std::vector<GroupElement> elements;
  std::vector<std::size_t> generator_ids;
  std::vector<std::size_t> inverse_of;
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> classes;
  std::vector<std::size_t> class_rep;

  std::size_t order() const { return elements.size(); }
};

// Closure of the generators under composition (breadth-first, so element
// order is deterministic); throws InputError past `bound` elements or on a
// non-unimodular generator.
FiniteMatrixGroup generate_group(std::size_t ambient, const std::vector<GroupElement>& gens,
                                 std::size_t bound = 10000);

// Multiplicative order of a unimodular matrix; throws InputError if it
// exceeds `bound`.
std::size_t matrix_order(const IntMat& m, std::size_t bound = 1000);

// Exact character table over Q(sqrt d) (d = 0 for rational tables).
// Classes are identified by the matrix order of their representatives and
// by whether the translation part is nonzero; columns sharing both marks
// are resolved in listed order by first encounter during matching.
struct CharacterTable {
  std::vector<std::string> names;
  std::vector<std::size_t> degrees;
  std::vector<std::string> class_names;
  std::vector<std::size_t> class_sizes;
  std::vector<std::pair<std::size_t, bool>> class_marks;  // (matrix order, has translation)
  std::vector<std::vector<Quad>> chi;                     // chi[irrep][class]

  std::size_t order() const;
  std::size_t irrep_count() const { return names.size(); }
  std::size_t class_count() const { return class_names.size(); }
};

// The bundled table of the icosahedral rotation group times a central
// order-2 translation: irreps A, A', T1, T1', T2, T2', G, G', H, H' over
// Q(sqrt 5); primed irreps are antisymmetric under the translation.
CharacterTable icosahedral_z2_table();

// The one-irrep table of the trivial group.
CharacterTable trivial_table();

// Verifies row orthogonality, class size sum and degree consistency
// exactly; throws InconsistencyError on failure.
void validate_table(const CharacterTable& t);

// class_map[i] = table column of group class i. Matching is by the class
// marks; among same-marked columns (the two order-5 classes), the class of
// the first-encountered element takes the first column, and translation
// classes follow their matrix class. Throws InputError when the group does
// not fit the table.
std::vector<std::size_t> match_classes(const FiniteMatrixGroup& g, const CharacterTable& t);

// Multiplicity of each irrep in a representation with the given character
// (indexed by table column). Non-integral or negative multiplicities throw
// InconsistencyError.
struct IrrepDecomposition {
  std::map<std::string, std::size_t> mult;

  std::size_t total(const CharacterTable& t) const;
  bool operator==(const IrrepDecomposition& o) const { return mult == o.mult; }
};

IrrepDecomposition decompose(const std::vector<Quad>& character, const CharacterTable& t);

// A group bundled with its character table and the class matching.
struct SymmetryData {
  FiniteMatrixGroup group;
  CharacterTable table;
  std::vector<std::size_t> class_map;
};

SymmetryData make_symmetry(std::size_t ambient, const std::vector<GroupElement>& gens,
                           const CharacterTable& table);

}  // namespace torcoh
