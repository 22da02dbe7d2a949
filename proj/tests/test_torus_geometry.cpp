#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle_helpers.hpp"
#include "torcoh/subtorus.hpp"

using namespace torcoh;
using torcoh::testing::Rng;

namespace {

RatVec zeros(std::size_t n) { return RatVec(n, Rat(0)); }

Subtorus ab_torus(int which) {
  switch (which) {
    case 1: return canonicalize(4, IntMat{{1, 0, 0, 0}, {0, 1, 0, -1}}, zeros(4));
    case 2: return canonicalize(4, IntMat{{0, 1, 0, 0}, {1, 0, 1, 0}}, zeros(4));
    case 3: return canonicalize(4, IntMat{{0, 0, 1, 0}, {0, 1, 0, 1}}, zeros(4));
    default: return canonicalize(4, IntMat{{0, 0, 0, 1}, {-1, 0, 1, 0}}, zeros(4));
  }
}

Quad qs(int a, int b, long d) { return Quad(Rat(a), Rat(b), b == 0 ? 0 : d); }

// Octagonal face data: the planes dual to the eight cut directions, indexed
// by j with the opposite faces given by negating the anchor.
FaceSpec octagon_face(int j, bool positive) {
  std::vector<QuadVec> ns = {
      {qs(0, 0, 2), qs(1, 0, 2), qs(0, 1, 2), qs(1, 0, 2)},
      {qs(-1, 0, 2), qs(0, 0, 2), qs(1, 0, 2), qs(0, 1, 2)},
      {qs(0, -1, 2), qs(-1, 0, 2), qs(0, 0, 2), qs(1, 0, 2)},
      {qs(-1, 0, 2), qs(0, -1, 2), qs(-1, 0, 2), qs(0, 0, 2)}};
  std::vector<QuadVec> ks = {
      {qs(0, 0, 2), qs(1, 0, 2), qs(0, -1, 2), qs(1, 0, 2)},
      {qs(-1, 0, 2), qs(0, 0, 2), qs(1, 0, 2), qs(0, -1, 2)},
      {qs(0, 1, 2), qs(-1, 0, 2), qs(0, 0, 2), qs(1, 0, 2)},
      {qs(1, 0, 2), qs(0, -1, 2), qs(1, 0, 2), qs(0, 0, 2)}};
  std::vector<RatVec> anchors = {{Rat(0), Rat(1, 2), Rat(-1, 2), Rat(1, 2)},
                                 {Rat(-1, 2), Rat(0), Rat(1, 2), Rat(-1, 2)},
                                 {Rat(1, 2), Rat(-1, 2), Rat(0), Rat(1, 2)},
                                 {Rat(-1, 2), Rat(1, 2), Rat(-1, 2), Rat(0)}};
  FaceSpec f{ns[j], ks[j], anchors[j]};
  if (!positive)
    for (Rat& x : f.anchor) x = -x;
  return f;
}

}  // namespace

TEST_CASE("canonical form of points and lines") {
  Subtorus a = canonicalize(2, IntMat{{1, 0}}, RatVec{Rat(5, 2), Rat(0)});
  CHECK(a.offset == zeros(2));
  CHECK(a.direction.basis() == IntMat{{1, 0}});

  Subtorus p = canonicalize(2, IntMat(0, 2), RatVec{Rat(3, 2), Rat(-1, 4)});
  CHECK(p.dim() == 0);
  CHECK(p.offset == RatVec{Rat(1, 2), Rat(3, 4)});

  Subtorus diag = canonicalize(2, IntMat{{1, 1}}, RatVec{Rat(1, 3), Rat(1, 3)});
  CHECK(diag.offset == zeros(2));
  Subtorus diag2 = canonicalize(2, IntMat{{1, 1}}, RatVec{Rat(1, 3), Rat(2, 3)});
  CHECK(diag2.offset == RatVec{Rat(0), Rat(1, 3)});

  // Pivot 2 in the direction basis: offsets reduce modulo the projected
  // lattice, not merely into [0,1) coordinatewise.
  Subtorus t = canonicalize(3, IntMat{{1, 0, 0}, {0, 2, 1}}, RatVec{Rat(0), Rat(1, 2), Rat(0)});
  CHECK(t.offset == RatVec{Rat(0), Rat(0), Rat(1, 4)});

  Subtorus sat = canonicalize(2, IntMat{{2, 0}}, zeros(2));
  CHECK(sat.direction.basis() == IntMat{{1, 0}});

  CHECK_THROWS_AS(canonicalize(2, IntMat{{1, 0}, {2, 0}}, zeros(2)), InputError);
  CHECK_THROWS_AS(canonicalize(2, IntMat{{1, 0}}, zeros(3)), InputError);
}

TEST_CASE("canonical form is representation independent") {
  Rng rng(20260814);
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<int> den(1, 4);
  for (int trial = 0; trial < 120; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::size_t d = trial % n;
    Subtorus t = testing::random_subtorus(rng, n, d, 2, 3);

    IntMat basis = t.direction.basis();
    std::uniform_int_distribution<std::size_t> pick(0, d ? d - 1 : 0);
    for (int step = 0; d > 0 && step < 6; ++step) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j)
        basis.negate_row(i);
      else
        basis.addmul_row(i, j, Int(coef(rng)));
    }
    RatVec off = t.offset;
    for (std::size_t j = 0; j < n; ++j) off[j] += Rat(coef(rng));
    for (std::size_t i = 0; i < d; ++i) {
      Rat c(coef(rng), den(rng));
      c.canonicalize();
      for (std::size_t j = 0; j < n; ++j) off[j] += c * Rat(basis(i, j));
    }
    Subtorus again = canonicalize(n, basis, off);
    CHECK(again == t);

    Subtorus idem = canonicalize(n, t.direction.basis(), t.offset);
    CHECK(idem == t);
  }
}

TEST_CASE("membership tests") {
  Subtorus t1 = ab_torus(1);
  CHECK(contains_point(t1, RatVec{Rat(0), Rat(1, 3), Rat(0), Rat(2, 3)}));
  CHECK(contains_point(t1, RatVec{Rat(7, 5), Rat(0), Rat(1), Rat(0)}));
  CHECK_FALSE(contains_point(t1, RatVec{Rat(0), Rat(1, 3), Rat(0), Rat(1, 3)}));
  CHECK_FALSE(contains_point(t1, RatVec{Rat(0), Rat(0), Rat(1, 2), Rat(0)}));

  Subtorus plane = canonicalize(3, IntMat{{1, 0, 0}, {0, 1, 0}}, zeros(3));
  Subtorus line = canonicalize(3, IntMat{{1, 0, 0}}, RatVec{Rat(0), Rat(1, 3), Rat(0)});
  CHECK(contains_torus(plane, line));
  CHECK_FALSE(contains_torus(line, plane));
  Subtorus off_line = canonicalize(3, IntMat{{1, 0, 0}}, RatVec{Rat(0), Rat(0), Rat(1, 3)});
  CHECK_FALSE(contains_torus(plane, off_line));
  CHECK(contains_torus(plane, plane));
}

TEST_CASE("ordering is by dimension then basis then offset") {
  Subtorus plane = canonicalize(3, IntMat{{1, 0, 0}, {0, 1, 0}}, zeros(3));
  Subtorus line = canonicalize(3, IntMat{{1, 0, 0}}, zeros(3));
  CHECK(subtorus_less(plane, line));
  CHECK_FALSE(subtorus_less(line, plane));
  CHECK_FALSE(subtorus_less(line, line));
  Subtorus shifted = canonicalize(3, IntMat{{1, 0, 0}}, RatVec{Rat(0), Rat(1, 2), Rat(0)});
  CHECK(subtorus_less(line, shifted));
}

TEST_CASE("intersections of the octagonal arrangement tori") {
  Subtorus t1 = ab_torus(1), t2 = ab_torus(2), t3 = ab_torus(3), t4 = ab_torus(4);

  auto c13 = intersect(t1, t3);
  REQUIRE(c13.size() == 2);
  CHECK(c13[0].dim() == 0);
  CHECK(c13[0].offset == zeros(4));
  CHECK(c13[1].offset == RatVec{Rat(0), Rat(1, 2), Rat(0), Rat(1, 2)});

  auto c24 = intersect(t2, t4);
  REQUIRE(c24.size() == 2);
  CHECK(c24[0].offset == zeros(4));
  CHECK(c24[1].offset == RatVec{Rat(1, 2), Rat(0), Rat(1, 2), Rat(0)});

  auto c12 = intersect(t1, t2);
  REQUIRE(c12.size() == 1);
  CHECK(c12[0].dim() == 0);
  CHECK(c12[0].offset == zeros(4));

  auto self = intersect(t1, t1);
  REQUIRE(self.size() == 1);
  CHECK(self[0] == t1);
}

TEST_CASE("intersections in small fixed cases") {
  Subtorus plane = canonicalize(3, IntMat{{1, 0, 0}, {0, 1, 0}}, zeros(3));
  Subtorus line = canonicalize(3, IntMat{{1, 0, 0}}, RatVec{Rat(0), Rat(1, 3), Rat(0)});
  auto nested = intersect(plane, line);
  REQUIRE(nested.size() == 1);
  CHECK(nested[0] == line);

  Subtorus la = canonicalize(2, IntMat{{1, 0}}, zeros(2));
  Subtorus lb = canonicalize(2, IntMat{{1, 0}}, RatVec{Rat(0), Rat(1, 2)});
  CHECK(intersect(la, lb).empty());
  auto same = intersect(lb, lb);
  REQUIRE(same.size() == 1);
  CHECK(same[0] == lb);

  // Two planes in the 3-torus meeting in two circles.
  Subtorus pa = canonicalize(3, IntMat{{1, 0, 0}, {0, 2, 1}}, zeros(3));
  Subtorus pb = canonicalize(3, IntMat{{1, 0, 0}, {0, 0, 1}}, zeros(3));
  auto circles = intersect(pa, pb);
  REQUIRE(circles.size() == 2);
  CHECK(circles[0].direction.basis() == IntMat{{1, 0, 0}});
  CHECK(circles[0].offset == zeros(3));
  CHECK(circles[1].offset == RatVec{Rat(0), Rat(0), Rat(1, 2)});

  Subtorus amb2 = canonicalize(2, IntMat{{1, 0}}, zeros(2));
  CHECK_THROWS_AS(intersect(plane, amb2), InputError);
}

TEST_CASE("intersection agrees with brute-force translate enumeration") {
  Rng rng(31);
  for (int done = 0; done < 60; ++done) {
    std::size_t n = 2 + done % 3;
    std::uniform_int_distribution<std::size_t> dims(0, n - 1);
    Subtorus a = testing::random_subtorus(rng, n, dims(rng), 2, 3);
    Subtorus b = testing::random_subtorus(rng, n, dims(rng), 2, 3);
    auto oracle = testing::brute_force_intersect(a, b);
    auto fast = intersect(a, b);
    CHECK(fast == oracle);
    auto sym = intersect(b, a);
    CHECK(fast == sym);
  }
}

TEST_CASE("faces cut codimension-2 subtori") {
  // Rational face data: two coordinate constraints.
  FaceSpec axis{{qs(1, 0, 0), qs(0, 0, 0), qs(0, 0, 0), qs(0, 0, 0)},
                {qs(0, 0, 0), qs(1, 0, 0), qs(0, 0, 0), qs(0, 0, 0)},
                RatVec{Rat(1, 4), Rat(1, 3), Rat(0), Rat(0)}};
  Subtorus t = subtorus_from_face(axis, 4);
  CHECK(t.direction.basis() == IntMat{{0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(t.offset == RatVec{Rat(1, 4), Rat(1, 3), Rat(0), Rat(0)});

  // Octagonal faces land on the catalog tori shifted by half the body
  // diagonal of the acceptance window.
  Subtorus f0 = subtorus_from_face(octagon_face(0, true), 4);
  CHECK(f0.direction == ab_torus(1).direction);
  CHECK(f0.offset == RatVec{Rat(0), Rat(0), Rat(1, 2), Rat(0)});
  Subtorus f1 = subtorus_from_face(octagon_face(1, true), 4);
  CHECK(f1.direction == ab_torus(2).direction);
  CHECK(f1.offset == RatVec{Rat(0), Rat(0), Rat(0), Rat(1, 2)});
  Subtorus f2 = subtorus_from_face(octagon_face(2, true), 4);
  CHECK(f2.direction == ab_torus(3).direction);
  Subtorus f3 = subtorus_from_face(octagon_face(3, true), 4);
  CHECK(f3.direction == ab_torus(4).direction);

  // Opposite faces give the same subtorus, so each plane family is cut
  // twice before merging.
  for (int j = 0; j < 4; ++j)
    CHECK(subtorus_from_face(octagon_face(j, true), 4) ==
          subtorus_from_face(octagon_face(j, false), 4));

  FaceSpec degenerate{{qs(1, 0, 0), qs(0, 0, 0), qs(0, 0, 0), qs(0, 0, 0)},
                      {qs(2, 0, 0), qs(0, 0, 0), qs(0, 0, 0), qs(0, 0, 0)},
                      zeros(4)};
  CHECK_THROWS_AS(subtorus_from_face(degenerate, 4), InputError);
}

TEST_CASE("knitting parallel tori") {
  for (int j = 0; j < 4; ++j) {
    Subtorus pos = subtorus_from_face(octagon_face(j, true), 4);
    Subtorus neg = subtorus_from_face(octagon_face(j, false), 4);
    auto merged = knit(pos, neg, octagon_face(j, true).n);
    REQUIRE(merged.has_value());
    CHECK(*merged == pos);
  }

  // A transverse shift is not absorbed: no rational multiple of the
  // octagonal normal is itself rational.
  Subtorus f0 = subtorus_from_face(octagon_face(0, true), 4);
  FaceSpec shifted = octagon_face(0, true);
  shifted.anchor[1] += Rat(1, 4);
  Subtorus g0 = subtorus_from_face(shifted, 4);
  CHECK_FALSE(g0 == f0);
  CHECK_FALSE(knit(f0, g0, octagon_face(0, true).n).has_value());

  // A rational normal direction absorbs rational shifts along itself.
  Subtorus pa = canonicalize(2, IntMat(0, 2), zeros(2));
  Subtorus pb = canonicalize(2, IntMat(0, 2), RatVec{Rat(1, 3), Rat(0)});
  Subtorus pc = canonicalize(2, IntMat(0, 2), RatVec{Rat(0), Rat(1, 3)});
  QuadVec horizontal{Quad(1), Quad(0)};
  CHECK(knit(pa, pb, horizontal).has_value());
  CHECK_FALSE(knit(pa, pc, horizontal).has_value());

  // Mixed irrational normal: only integer translates merge.
  QuadVec mixed{Quad(Rat(0), Rat(1), 2), Quad(1)};
  Subtorus ph = canonicalize(2, IntMat(0, 2), RatVec{Rat(1, 2), Rat(0)});
  CHECK_FALSE(knit(pa, ph, mixed).has_value());
  CHECK(knit(pa, pa, mixed).has_value());

  Subtorus line = canonicalize(2, IntMat{{1, 0}}, zeros(2));
  CHECK_THROWS_AS(knit(pa, line, horizontal), InputError);
}
