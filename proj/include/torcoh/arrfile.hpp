#pragma once

#include <optional>
#include <string>
#include <vector>

#include "torcoh/group.hpp"
#include "torcoh/subtorus.hpp"

namespace torcoh {

// A parsed arrangement file: the canonicalized tori in directive order
// (face and merge directives already resolved into plain tori), the
// quadratic field discriminant if declared, and any symmetry generators.
struct ArrangementInput {
  Arrangement arrangement;
  std::vector<std::string> torus_names;
  std::optional<unsigned long> field_d;
  std::vector<GroupElement> generators;
};

// Text format, one directive per line, '#' starts a comment:
//   ambient N
//   field sqrt D
//   torus <name> basis [a,b,...; c,d,...] offset (r,...)
//   face <name> n (q,...) k (q,...) anchor (r,...)
//   merge <name> <name> along (q,...)
//   group generator [a,b,...; ...] offset (r,...)
// with integers a, rationals r as p/q, and quadratic scalars q as
// a+b*sqrt(D). The offset clause of a group generator is optional.
// Throws ParseError with a 1-based line number on malformed input.
ArrangementInput parse_arrangement_file(const std::string& text, const std::string& name);

// Inverse of the parser up to resolved face/merge directives: the output
// parses back to an equal ArrangementInput.
std::string write_arrangement_file(const ArrangementInput& input);

}  // namespace torcoh
