#pragma once

#include "torcoh/intalg.hpp"

namespace torcoh {

// A sublattice of Z^N, stored as an HNF basis (rows = generators, full row
// rank). Values are immutable after construction.
class Lattice {
 public:
  Lattice() = default;
  static Lattice from_rows(std::size_t ambient, const IntMat& generators);
  static Lattice zero(std::size_t ambient) { return from_rows(ambient, IntMat(0, ambient)); }
  static Lattice full(std::size_t ambient) { return from_rows(ambient, IntMat::identity(ambient)); }

  std::size_t ambient() const { return ambient_; }
  std::size_t rank() const { return basis_.rows(); }
  const IntMat& basis() const { return basis_; }

  friend bool operator==(const Lattice& a, const Lattice& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t ambient_ = 0;
  IntMat basis_;
};

Lattice saturate(const Lattice& l);
Lattice lattice_sum(const Lattice& a, const Lattice& b);
Lattice lattice_rational_intersection(const Lattice& a, const Lattice& b);

// [super : sub] for sub of finite index in super (equal rational spans).
// Throws InputError on rank mismatch or non-containment.
Int index_of(const Lattice& sub, const Lattice& super);

bool lattice_contains(const Lattice& l, const IntVec& v);
bool same_rational_span(const Lattice& a, const Lattice& b);

}  // namespace torcoh
