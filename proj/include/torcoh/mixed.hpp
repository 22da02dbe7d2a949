#pragma once

#include <optional>

#include "torcoh/matrix.hpp"

namespace torcoh {

// Witness for y*A_rat + z*A_int = b with y rational and z integral.
struct MixedSolution {
  RatVec y;
  IntVec z;
};

// Decides membership of b in rowspace_Q(A_rat) + rowlattice_Z(A_int) and
// returns one witness. The rational unknowns are eliminated by projecting
// onto the quotient by rowspace_Q(A_rat); what remains is plain lattice
// membership, solved by HNF.
std::optional<MixedSolution> solve_mixed(const RatMat& a_rat, const IntMat& a_int, const RatVec& b);

}  // namespace torcoh
