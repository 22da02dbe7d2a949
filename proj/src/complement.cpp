#include "torcoh/complement.hpp"

#include <algorithm>
#include <set>
#include <utility>

#include "torcoh/exterior.hpp"
#include "torcoh/linalg.hpp"
#include "torcoh/mixed.hpp"

namespace torcoh {

namespace {

// Displacement from u's offset lift to v's, constrained to the direction
// space of the larger torus of the pair (the smaller id, since element
// numbering is dimension-descending).
RatVec edge_delta(const IntersectionPoset& poset, std::size_t u, std::size_t v) {
  const Subtorus& big = poset.elements[std::min(u, v)].torus;
  RatVec diff = vec_sub(poset.elements[v].torus.offset, poset.elements[u].torus.offset);
  auto sol = solve_mixed(to_rat(big.direction.basis()), IntMat::identity(poset.ambient), diff);
  if (!sol) throw InconsistencyError("comparable elements with no common lift");
  RatVec delta = diff;
  for (std::size_t c = 0; c < delta.size(); ++c) delta[c] -= Rat(sol->z[c]);
  return delta;
}

std::size_t betti_at(const std::vector<std::size_t>& b, std::size_t k) {
  return k < b.size() ? b[k] : 0;
}

}  // namespace

std::vector<IntVec> loop_generators(const IntersectionPoset& poset) {
  const std::size_t n = poset.elements.size();
  const std::size_t N = poset.ambient;
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::vector<std::size_t>> adj(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (poset.less(i, j) || poset.less(j, i)) {
        edges.push_back({i, j});
        adj[i].push_back(j);
        adj[j].push_back(i);
      }
  std::vector<char> seen(n, 0);
  std::vector<RatVec> phi(n);
  std::set<std::pair<std::size_t, std::size_t>> tree;
  for (std::size_t root = 0; root < n; ++root) {
    if (seen[root]) continue;
    seen[root] = 1;
    phi[root] = RatVec(N, Rat(0));
    std::vector<std::size_t> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      std::size_t u = queue[head];
      for (std::size_t v : adj[u]) {
        if (seen[v]) continue;
        seen[v] = 1;
        phi[v] = vec_add(phi[u], edge_delta(poset, u, v));
        tree.insert({std::min(u, v), std::max(u, v)});
        queue.push_back(v);
      }
    }
  }
  std::vector<IntVec> out;
  for (const auto& [u, v] : edges) {
    if (tree.count({u, v})) continue;
    RatVec cyc = vec_add(edge_delta(poset, u, v), vec_sub(phi[u], phi[v]));
    IntVec row(N);
    for (std::size_t c = 0; c < N; ++c) {
      if (!is_integer(cyc[c])) throw InconsistencyError("fundamental cycle class is not integral");
      row[c] = cyc[c].get_num();
    }
    out.push_back(std::move(row));
  }
  return out;
}

RankInterval alpha_rank(const IntersectionPoset& poset, const E2Dims& e2, std::size_t q,
                        const AlphaAssist* assist) {
  const std::size_t N = poset.ambient;
  RankInterval r;
  if (q > N) {
    r.exact = true;
    return r;
  }
  IntMat stacked(0, binom(N, q));
  for (const auto& el : poset.elements) {
    if (el.torus.dim() < q) continue;
    stacked = vstack(stacked, exterior_power(el.torus.direction.basis(), q));
  }
  if (q == 1) {
    auto loops = loop_generators(poset);
    IntMat lm(loops.size(), N);
    for (std::size_t i = 0; i < loops.size(); ++i) lm.set_row(i, loops[i]);
    stacked = vstack(stacked, lm);
  }
  r.lower = field_rank(to_rat(stacked));

  std::size_t via_e2 = 0;
  bool pure = true;
  for (std::size_t p = 0; p <= q; ++p) {
    auto it = e2.find({p, q - p});
    std::size_t d = it == e2.end() ? 0 : it->second;
    via_e2 += d;
    if (p >= 1 && d > 0) pure = false;
  }
  r.upper = std::min(via_e2, binom(N, q));
  if (assist) {
    std::size_t bound = 0;
    for (const auto& [name, deg] : assist->degree) {
      auto hi = assist->mult_hq.find(name);
      auto wi = assist->mult_wedge.find(name);
      std::size_t h = hi == assist->mult_hq.end() ? 0 : hi->second;
      std::size_t w = wi == assist->mult_wedge.end() ? 0 : wi->second;
      bound += deg * std::min(h, w);
    }
    r.upper = std::min(r.upper, bound);
  }
  if (r.lower > r.upper)
    throw InconsistencyError("inclusion rank lower bound exceeds its upper bound");
  if (pure) r.upper = r.lower;
  r.exact = r.lower == r.upper;
  return r;
}

std::vector<RankInterval> c_ranks(const std::vector<RankInterval>& alpha, std::size_t N) {
  if (alpha.size() != N + 1) throw InputError("need inclusion ranks for n = 0..N");
  std::vector<RankInterval> c(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    std::size_t full = binom(N, n);
    if (alpha[n].lower > alpha[n].upper || alpha[n].upper > full)
      throw InputError("inclusion rank bounds out of range");
    c[n].lower = full - alpha[n].upper;
    c[n].upper = full - alpha[n].lower;
    c[n].exact = c[n].lower == c[n].upper;
  }
  return c;
}

std::vector<std::size_t> betti_complement(const std::vector<std::size_t>& betti_a,
                                          const std::vector<RankInterval>& c, std::size_t N) {
  if (c.size() != N + 1) throw InputError("need c_0..c_N");
  for (const auto& ci : c)
    if (!ci.exact) throw InputError("point-valued assembly needs exact c ranks");
  std::vector<std::size_t> b(N, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    Int v = Int(static_cast<unsigned long>(betti_at(betti_a, N - n)));
    v += static_cast<unsigned long>(c[n - 1].lower);
    v += static_cast<unsigned long>(c[n].lower);
    v -= static_cast<unsigned long>(binom(N, n));
    if (v < 0) throw InconsistencyError("negative Betti number in the complement assembly");
    b[n - 1] = v.get_ui();
  }
  return b;
}

ComplementReport complement_report(const IntersectionPoset& poset, const SpectralPage& page,
                                   const Differentials& d1, const CollapseAssist* collapse,
                                   const std::map<std::size_t, AlphaAssist>* alpha_assists) {
  ComplementReport rep;
  const std::size_t N = poset.ambient;
  rep.ambient = N;
  rep.betti_a = compute_betti(page, d1, collapse);
  E2Dims e2 = e2_dimensions(page, d1);

  rep.alpha.resize(N + 1);
  for (std::size_t n = 0; n <= N; ++n) {
    const AlphaAssist* assist = nullptr;
    if (alpha_assists) {
      auto it = alpha_assists->find(N - n);
      if (it != alpha_assists->end()) assist = &it->second;
    }
    rep.alpha[n] = alpha_rank(poset, e2, N - n, assist);
  }
  rep.c = c_ranks(rep.alpha, N);

  rep.exact = rep.betti_a.certificate != CollapseCertificate::unresolved;
  for (const auto& ci : rep.c) rep.exact = rep.exact && ci.exact;
  if (rep.exact) {
    rep.betti = betti_complement(rep.betti_a.b, rep.c, N);
    rep.betti_lower = rep.betti;
    rep.betti_upper = rep.betti;
    return rep;
  }

  rep.betti_lower.assign(N, 0);
  rep.betti_upper.assign(N, 0);
  for (std::size_t n = 1; n <= N; ++n) {
    Int hi = Int(static_cast<unsigned long>(betti_at(rep.betti_a.b, N - n)));
    hi += static_cast<unsigned long>(rep.c[n - 1].upper);
    hi += static_cast<unsigned long>(rep.c[n].upper);
    hi -= static_cast<unsigned long>(binom(N, n));
    if (hi < 0) throw InconsistencyError("negative Betti number in the complement assembly");
    Int lo = Int(static_cast<unsigned long>(betti_at(rep.betti_a.lower, N - n)));
    lo += static_cast<unsigned long>(rep.c[n - 1].lower);
    lo += static_cast<unsigned long>(rep.c[n].lower);
    lo -= static_cast<unsigned long>(binom(N, n));
    if (lo < 0) lo = 0;
    rep.betti_upper[n - 1] = hi.get_ui();
    rep.betti_lower[n - 1] = lo.get_ui();
  }
  return rep;
}

ComplementReport complement_report_empty(std::size_t ambient) {
  ComplementReport rep;
  rep.ambient = ambient;
  rep.betti_a.certificate = CollapseCertificate::two_columns;
  rep.alpha.assign(ambient + 1, RankInterval{0, 0, true});
  rep.c.resize(ambient + 1);
  for (std::size_t n = 0; n <= ambient; ++n) {
    std::size_t full = binom(ambient, n);
    rep.c[n] = RankInterval{full, full, true};
  }
  rep.betti.resize(ambient);
  for (std::size_t n = 0; n < ambient; ++n) rep.betti[n] = binom(ambient, n);
  rep.betti_lower = rep.betti;
  rep.betti_upper = rep.betti;
  rep.exact = true;
  return rep;
}

}  // namespace torcoh
