#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torcoh/lattice.hpp"
#include "torcoh/mixed.hpp"
#include "torcoh/quad.hpp"

namespace torcoh {

// A rational affine subtorus of T^N = R^N/Z^N in canonical form: the
// direction lattice is saturated and in HNF, and the offset is the unique
// reduced representative of its coset modulo direction space + Z^N. Two
// subtori are equal iff their fields are componentwise equal.
struct Subtorus {
  std::size_t ambient = 0;
  Lattice direction;
  RatVec offset;

  std::size_t dim() const { return direction.rank(); }

  friend bool operator==(const Subtorus& a, const Subtorus& b) {
    return a.ambient == b.ambient && a.direction == b.direction && a.offset == b.offset;
  }
};

// Strict total order on canonical forms: dimension descending, then basis,
// then offset lexicographically. Used for deterministic element numbering.
bool subtorus_less(const Subtorus& a, const Subtorus& b);

// Builds the canonical form. The raw basis rows must be independent over Q;
// they are saturated, HNF-reduced, and the offset is reduced first by the
// direction space (zeroing the pivot coordinates) and then by the induced
// lattice on the free coordinates.
Subtorus canonicalize(std::size_t ambient, const IntMat& raw_direction, const RatVec& raw_offset);

bool contains_point(const Subtorus& t, const RatVec& p);
bool contains_torus(const Subtorus& outer, const Subtorus& inner);

// Connected components of the intersection, canonical and pairwise
// distinct; empty when the cosets miss each other. Every component is
// membership-checked against both inputs before being returned.
std::vector<Subtorus> intersect(const Subtorus& t1, const Subtorus& t2);

// A codimension-2 face datum: n is normal to the singular-cut hyperplane in
// the lattice coordinate frame, k is normal to the face within the
// orthogonal space, anchor is a rational point on the face lift.
struct FaceSpec {
  QuadVec n;
  QuadVec k;
  RatVec anchor;
};

// The affine subtorus orthogonal to both n and k through the anchor:
// direction = saturated integer kernel of the rational and irrational parts
// of n and k. Throws InputError unless that kernel has dimension N-2.
Subtorus subtorus_from_face(const FaceSpec& f, std::size_t ambient);

// Merge decision for two parallel tori: they knit into one iff
// offset_b - offset_a lies in direction + Q(sqrt d)*n + Z^N with a rational
// witness. Returns the merged torus on t_a's coset, or nothing.
std::optional<Subtorus> knit(const Subtorus& t_a, const Subtorus& t_b, const QuadVec& n);

struct Arrangement {
  std::size_t ambient = 0;
  std::vector<Subtorus> tori;
  std::string name;
};

}  // namespace torcoh
