#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "oracle_helpers.hpp"
#include "torcoh/exterior.hpp"
#include "torcoh/intalg.hpp"
#include "torcoh/lattice.hpp"
#include "torcoh/linalg.hpp"
#include "torcoh/mixed.hpp"
#include "torcoh/numbers.hpp"
#include "torcoh/quad.hpp"

using namespace torcoh;
using torcoh::testing::Rng;

namespace {

bool is_hnf(const IntMat& h) {
  long last_pivot = -1;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h(i, j) == 0) ++j;
    if (j == h.cols()) return false;
    if (static_cast<long>(j) <= last_pivot) return false;
    if (h(i, j) <= 0) return false;
    for (std::size_t k = 0; k < i; ++k)
      if (h(k, j) < 0 || h(k, j) >= h(i, j)) return false;
    last_pivot = static_cast<long>(j);
  }
  return true;
}

Int abs_det(const IntMat& m) {
  Int d = det(m);
  return d < 0 ? Int(-d) : d;
}

}  // namespace

TEST_CASE("rational parsing and formatting") {
  CHECK(rat_from_string("3/4") == Rat(3, 4));
  CHECK(rat_from_string("-7") == Rat(-7));
  CHECK(rat_from_string("6/4") == Rat(3, 2));
  CHECK(rat_to_string(Rat(-3, 2)) == "-3/2");
  CHECK(rat_to_string(Rat(5)) == "5");
  CHECK_THROWS_AS(rat_from_string("1/0"), InputError);
  CHECK_THROWS_AS(rat_from_string("x"), InputError);
  CHECK(rat_frac(Rat(-1, 3)) == Rat(2, 3));
  CHECK(rat_floor(Rat(-1, 3)) == -1);
  CHECK(rat_floor(Rat(7, 3)) == 2);
  CHECK(binom(6, 3) == 20);
  CHECK(binom(4, 0) == 1);
  CHECK(binom(3, 5) == 0);
}

TEST_CASE("quadratic field arithmetic") {
  Quad x(Rat(1, 2), Rat(3), 5);  // 1/2 + 3*sqrt(5)
  Quad y(Rat(2), Rat(-1), 5);
  Quad p = x * y;
  CHECK(p.a == Rat(1) - Rat(15));
  CHECK(p.b == Rat(11, 2));
  CHECK((x / x) == Quad(1));
  CHECK((x * conj(x)).b == 0);
  CHECK(quad_norm(y) == Rat(4) - Rat(5));
  Quad zero = x - x;
  CHECK(zero.d == 0);
  CHECK(zero == Quad(0));

  Quad r2(Rat(0), Rat(1), 2);
  CHECK_THROWS_AS(x + r2, InputError);
  CHECK((x + Quad(2)).a == Rat(5, 2));

  CHECK(quad_to_string(x) == "1/2+3*sqrt(5)");
  CHECK(quad_to_string(Quad(Rat(0), Rat(-1, 2), 2)) == "-1/2*sqrt(2)");
  CHECK(quad_from_string("1/2+3*sqrt(5)", 5) == x);
  CHECK(quad_from_string("-2-1/3*sqrt(2)", 2) == Quad(Rat(-2), Rat(-1, 3), 2));
  CHECK(quad_from_string("4", 5) == Quad(4));
  CHECK_THROWS_AS(quad_from_string("1+sqrt(3)", 5), InputError);
}

TEST_CASE("hermite normal form on fixed inputs") {
  IntMat m{{2, 4, 4}, {-6, 6, 12}, {10, 4, 16}};
  HermiteResult h = hermite_rows(m);
  CHECK(h.rank == 3);
  CHECK(is_hnf(take_rows(h.H, 0, h.rank)));
  CHECK(mul(h.U, m) == h.H);
  CHECK(abs_det(h.U) == 1);

  IntMat dependent{{1, 2, 3}, {2, 4, 6}, {0, 1, 1}};
  HermiteResult hd = hermite_rows(dependent);
  CHECK(hd.rank == 2);
  for (std::size_t j = 0; j < 3; ++j) CHECK(hd.H(2, j) == 0);

  IntMat empty(0, 3);
  HermiteResult he = hermite_rows(empty);
  CHECK(he.rank == 0);
  CHECK(he.H.rows() == 0);
}

TEST_CASE("hermite form is a canonical row-span invariant") {
  Rng rng(20260814);
  for (int trial = 0; trial < 100; ++trial) {
    IntMat m = testing::random_int_matrix(rng, 3, 4, 5);
    HermiteResult h1 = hermite_rows(m);
    // Mix rows by a random unimodular matrix built from elementary ops.
    IntMat mixed = m;
    std::uniform_int_distribution<int> pick(0, 2);
    std::uniform_int_distribution<int> coef(-3, 3);
    for (int step = 0; step < 8; ++step) {
      std::size_t i = pick(rng), j = pick(rng);
      if (i == j) {
        mixed.negate_row(i);
      } else {
        mixed.addmul_row(i, j, Int(coef(rng)));
      }
    }
    HermiteResult h2 = hermite_rows(mixed);
    CHECK(h1.rank == h2.rank);
    CHECK(take_rows(h1.H, 0, h1.rank) == take_rows(h2.H, 0, h2.rank));
  }
}

TEST_CASE("smith normal form on fixed inputs") {
  SmithResult s1 = smith_normal_form(IntMat::identity(3));
  CHECK(s1.invariants == std::vector<Int>{1, 1, 1});

  SmithResult s2 = smith_normal_form(IntMat{{2, 0}, {0, 3}});
  CHECK(s2.invariants == std::vector<Int>{1, 6});

  SmithResult s3 = smith_normal_form(IntMat{{2, 4}, {6, 8}});
  CHECK(s3.invariants == std::vector<Int>{2, 4});

  SmithResult s4 = smith_normal_form(IntMat{{0, 0}, {0, 0}});
  CHECK(s4.invariants.empty());

  SmithResult s5 = smith_normal_form(IntMat{{6, 10, 15}});
  CHECK(s5.invariants == std::vector<Int>{1});
}

TEST_CASE("smith normal form reconstruction on random matrices") {
  Rng rng(97);
  std::uniform_int_distribution<std::size_t> dim(1, 5);
  for (int trial = 0; trial < 500; ++trial) {
    std::size_t r = dim(rng), c = dim(rng);
    IntMat m = testing::random_int_matrix(rng, r, c, 9);
    SmithResult s = smith_normal_form(m);
    CHECK(mul(mul(s.U, s.D), s.V) == m);
    CHECK(abs_det(s.U) == 1);
    CHECK(abs_det(s.V) == 1);
    for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i) {
      CHECK(s.invariants[i] > 0);
      CHECK(s.invariants[i + 1] % s.invariants[i] == 0);
    }
    for (std::size_t i = 0; i < s.D.rows(); ++i)
      for (std::size_t j = 0; j < s.D.cols(); ++j)
        if (i != j) CHECK(s.D(i, j) == 0);
    CHECK(s.invariants.size() == static_cast<std::size_t>(int_rank(m)));
  }
}

TEST_CASE("determinant matches cofactor expansion") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    IntMat m = testing::random_int_matrix(rng, 4, 4, 6);
    std::vector<std::size_t> all{0, 1, 2, 3};
    CHECK(det(m) == det_laplace(m, all, all));
  }
  CHECK(det(IntMat{{1, 2}, {3, 4}}) == -2);
  CHECK(det(IntMat::identity(5)) == 1);
}

TEST_CASE("integer kernels and row solves") {
  IntMat m{{1, 2, 3}, {2, 4, 6}};
  IntMat lk = left_kernel(m);
  REQUIRE(lk.rows() == 1);
  CHECK(vec_is_zero(mul_row(lk.row(0), m)));

  IntMat rk = right_kernel(m);
  CHECK(rk.cols() == 2);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < rk.cols(); ++j) {
      Int acc = 0;
      for (std::size_t k = 0; k < 3; ++k) acc += m(i, k) * rk(k, j);
      CHECK(acc == 0);
    }

  IntMat a{{2, 0, 0}, {0, 3, 0}};
  auto z = solve_row_integer(a, IntVec{4, -9, 0});
  REQUIRE(z.has_value());
  CHECK(*z == IntVec{2, -3});
  CHECK_FALSE(solve_row_integer(a, IntVec{1, 0, 0}).has_value());
  CHECK_FALSE(solve_row_integer(a, IntVec{0, 0, 1}).has_value());

  Rng rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    IntMat basis = testing::random_int_matrix(rng, 2, 4, 4);
    IntVec coeff{Int(trial % 5 - 2), Int(trial % 7 - 3)};
    IntVec b = mul_row(coeff, basis);
    auto sol = solve_row_integer(basis, b);
    REQUIRE(sol.has_value());
    CHECK(mul_row(*sol, basis) == b);
  }
}

TEST_CASE("saturation basis") {
  IntMat doubled{{2, 0}};
  CHECK(saturation_basis(doubled) == IntMat{{1, 0}});

  IntMat skew{{1, 1}, {1, -1}};
  CHECK(saturation_basis(skew) == IntMat::identity(2));

  IntMat already{{1, 0, 0, 0}, {0, 1, 0, -1}};
  CHECK(saturation_basis(already) == already);

  Rng rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    IntMat m = testing::random_int_matrix(rng, 2, 4, 5);
    IntMat s = saturation_basis(m);
    CHECK(saturation_basis(s) == s);
    CHECK(int_rank(s) == int_rank(m));
  }
}

TEST_CASE("lattice operations") {
  Lattice l1 = Lattice::from_rows(4, IntMat{{1, 0, 0, 0}, {0, 1, 0, -1}});
  Lattice l2 = Lattice::from_rows(4, IntMat{{0, 0, 1, 0}, {0, 1, 0, 1}});
  Lattice s = lattice_sum(l1, l2);
  CHECK(s.rank() == 4);
  Lattice sat = saturate(s);
  CHECK(sat == Lattice::full(4));
  CHECK(index_of(s, sat) == 2);

  Lattice meet = lattice_rational_intersection(l1, l2);
  CHECK(meet.rank() == 0);

  Lattice a = Lattice::from_rows(3, IntMat{{1, 0, 0}, {0, 1, 0}});
  Lattice b = Lattice::from_rows(3, IntMat{{0, 1, 0}, {0, 0, 1}});
  Lattice m = lattice_rational_intersection(a, b);
  CHECK(m == Lattice::from_rows(3, IntMat{{0, 1, 0}}));

  CHECK(index_of(Lattice::from_rows(2, IntMat{{2, 0}, {0, 3}}), Lattice::full(2)) == 6);
  CHECK_THROWS_AS(index_of(Lattice::full(2), Lattice::from_rows(2, IntMat{{2, 0}, {0, 3}})),
                  InputError);
  CHECK(lattice_contains(l1, IntVec{3, 2, 0, -2}));
  CHECK_FALSE(lattice_contains(l1, IntVec{0, 1, 0, 0}));
}

TEST_CASE("exterior powers on fixed inputs") {
  IntMat m{{1, 2}, {3, 4}};
  CHECK(exterior_power(m, 1) == m);
  CHECK(exterior_power(m, 2) == IntMat{{-2}});
  CHECK(exterior_power(m, 0) == IntMat::identity(1));

  IntMat t{{1, 1, 0}, {0, 1, 0}, {0, 0, 2}};
  IntMat w2 = exterior_power(t, 2);
  // Basis order {0,1}, {0,2}, {1,2}.
  CHECK(w2 == IntMat{{1, 0, 0}, {0, 2, 2}, {0, 0, 2}});

  auto subsets = index_subsets(4, 2);
  REQUIRE(subsets.size() == 6);
  CHECK(subsets[0] == std::vector<std::size_t>{0, 1});
  CHECK(subsets[5] == std::vector<std::size_t>{2, 3});
  CHECK(index_subsets(3, 0).size() == 1);
  CHECK(index_subsets(2, 3).empty());
}

TEST_CASE("exterior power is functorial") {
  Rng rng(14);
  for (int trial = 0; trial < 60; ++trial) {
    IntMat x = testing::random_int_matrix(rng, 2, 3, 3);
    IntMat y = testing::random_int_matrix(rng, 3, 4, 3);
    for (std::size_t q = 0; q <= 2; ++q)
      CHECK(exterior_power(mul(x, y), q) == mul(exterior_power(x, q), exterior_power(y, q)));
  }
}

TEST_CASE("compound traces match elementary symmetric functions") {
  Rng rng(15);
  for (int trial = 0; trial < 40; ++trial) {
    std::size_t n = 2 + trial % 4;
    IntMat m = testing::random_int_matrix(rng, n, n, 4);
    auto e = testing::elementary_symmetric_of_eigenvalues(m);
    for (std::size_t q = 0; q <= n; ++q) CHECK(Rat(trace(exterior_power(m, q))) == e[q]);
  }
}

TEST_CASE("field rank and nullspaces over the rationals") {
  RatMat m{{Rat(1), Rat(2)}, {Rat(2), Rat(4)}, {Rat(0), Rat(1)}};
  CHECK(field_rank(m) == 2);
  RatMat ns = left_nullspace(m);
  REQUIRE(ns.rows() == 1);
  for (std::size_t j = 0; j < 2; ++j) {
    Rat acc(0);
    for (std::size_t i = 0; i < 3; ++i) acc += ns(0, i) * m(i, j);
    CHECK(acc == 0);
  }

  auto y = solve_left(m, RatVec{Rat(1), Rat(3)});
  REQUIRE(y.has_value());
  CHECK(vec_sub(mul_row(*y, m), RatVec{Rat(1), Rat(3)}) == RatVec(2, Rat(0)));

  RatMat rows{{Rat(1), Rat(0), Rat(0)}};
  CHECK_FALSE(solve_left(rows, RatVec{Rat(0), Rat(1), Rat(0)}).has_value());

  QuadMat qm(2, 2);
  qm(0, 0) = Quad(Rat(1), Rat(1), 5);
  qm(0, 1) = Quad(1);
  qm(1, 0) = Quad(Rat(2), Rat(2), 5);
  qm(1, 1) = Quad(2);
  CHECK(field_rank(qm) == 1);
}

TEST_CASE("mixed rational-integer solve on fixed inputs") {
  // y*(1) + z*(1) = 1/2 in one variable each.
  RatMat a_rat{{Rat(1)}};
  IntMat a_int{{1}};
  auto sol = solve_mixed(a_rat, a_int, RatVec{Rat(1, 2)});
  REQUIRE(sol.has_value());
  RatVec back(1, Rat(0));
  back[0] = sol->y[0] + Rat(sol->z[0]);
  CHECK(back[0] == Rat(1, 2));

  // Zero right-hand side always solvable.
  auto zero = solve_mixed(a_rat, a_int, RatVec{Rat(0)});
  REQUIRE(zero.has_value());

  // Pure integer part: 2z = 1 has no integer solution.
  RatMat none(0, 1);
  auto inf = solve_mixed(none, IntMat{{2}}, RatVec{Rat(1)});
  CHECK_FALSE(inf.has_value());
  auto ok = solve_mixed(none, IntMat{{2}}, RatVec{Rat(4)});
  REQUIRE(ok.has_value());
  CHECK(ok->z == IntVec{2});

  // Fractional target orthogonal to everything is infeasible.
  RatMat plane{{Rat(1), Rat(0)}};
  auto miss = solve_mixed(plane, IntMat{{1, 0}}, RatVec{Rat(0), Rat(1, 2)});
  CHECK_FALSE(miss.has_value());
}

TEST_CASE("mixed solve satisfies the substitution property") {
  Rng rng(16);
  std::uniform_int_distribution<std::size_t> dim(1, 3);
  int feasible_seen = 0;
  for (int trial = 0; trial < 200; ++trial) {
    std::size_t n = 2 + trial % 3;
    std::size_t p = dim(rng) % (n + 1), q = dim(rng) % (n + 1);
    RatMat a_rat(p, n);
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < n; ++j) a_rat(i, j) = testing::random_rational(rng, 3, 2);
    IntMat a_int = testing::random_int_matrix(rng, q, n, 3);
    RatVec b(n);
    for (auto& x : b) x = testing::random_rational(rng, 3, 3);
    auto sol = solve_mixed(a_rat, a_int, b);
    if (!sol) continue;
    ++feasible_seen;
    RatVec lhs(n, Rat(0));
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < n; ++j) lhs[j] += sol->y[i] * a_rat(i, j);
    for (std::size_t i = 0; i < q; ++i)
      for (std::size_t j = 0; j < n; ++j) lhs[j] += Rat(sol->z[i]) * Rat(a_int(i, j));
    CHECK(lhs == b);
  }
  CHECK(feasible_seen > 20);
}
