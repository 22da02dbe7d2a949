#pragma once

#include <map>
#include <string>
#include <vector>

#include "torcoh/spectral.hpp"

namespace torcoh {

// Rank of a map known through bounds; exact iff the bounds coincide.
struct RankInterval {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
};

// Equivariant upper-bound data for one homological degree q: irrep degrees
// and the multiplicities of H_q(A) and of H_q(T^N). The image of the
// inclusion-induced map is a quotient of the first and a subrepresentation
// of the second, so its rank is at most sum of degree * min(mults).
struct AlphaAssist {
  std::map<std::string, std::size_t> degree;
  std::map<std::string, std::size_t> mult_hq;
  std::map<std::string, std::size_t> mult_wedge;
};

using E2Dims = std::map<std::pair<std::size_t, std::size_t>, std::size_t>;

// Integer classes of the fundamental cycles of the element-incidence graph:
// each non-tree comparable pair closes a loop through the union whose total
// displacement is an integer vector, hence a class of H_1(T^N). Spanning
// forest roots are the lowest element ids, so the output is deterministic.
std::vector<IntVec> loop_generators(const IntersectionPoset& poset);

// Bounds for the rank of the inclusion-induced map H_q(A) -> H_q(T^N).
// Lower bound: rank over Q of the stacked q-th compound matrices of all
// element direction bases, plus the loop classes when q = 1. Upper bound:
// min of the E2 bound on b_q(A), binom(N, q), and the equivariant bound
// when supplied. Forced exact when H_q(A) has no positive-filtration part,
// since the stacked generators then span the whole image.
RankInterval alpha_rank(const IntersectionPoset& poset, const E2Dims& e2, std::size_t q,
                        const AlphaAssist* assist = nullptr);

// c_n = binom(N, n) - rank alpha[n], where alpha[n] bounds the rank of the
// degree-(N-n) inclusion map; alpha must be indexed n = 0..N.
std::vector<RankInterval> c_ranks(const std::vector<RankInterval>& alpha, std::size_t N);

// Betti numbers of the complement via the split long exact sequence:
// b_{n-1} = b_{N-n}(A) + c_{n-1} + c_n - binom(N, n) for n = 1..N.
// Requires exact c; a negative result signals inconsistent inputs.
std::vector<std::size_t> betti_complement(const std::vector<std::size_t>& betti_a,
                                          const std::vector<RankInterval>& c, std::size_t N);

// Full pipeline output for one arrangement. alpha[n] bounds the rank of
// the inclusion on H_{N-n}(A); betti holds b_0..b_{N-1} of the complement
// when every ingredient is exact, and betti_lower/betti_upper always hold
// the interval.
struct ComplementReport {
  std::size_t ambient = 0;
  BettiVector betti_a;
  std::vector<RankInterval> alpha;
  std::vector<RankInterval> c;
  std::vector<std::size_t> betti;
  std::vector<std::size_t> betti_lower;
  std::vector<std::size_t> betti_upper;
  bool exact = false;
};

// alpha_assists is keyed by the homological degree q = N - n.
ComplementReport complement_report(const IntersectionPoset& poset, const SpectralPage& page,
                                   const Differentials& d1,
                                   const CollapseAssist* collapse = nullptr,
                                   const std::map<std::size_t, AlphaAssist>* alpha_assists = nullptr);

// The arrangement-free case: the complement of nothing is the whole torus.
ComplementReport complement_report_empty(std::size_t ambient);

}  // namespace torcoh
