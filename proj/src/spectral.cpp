#include "torcoh/spectral.hpp"

#include <algorithm>

#include "torcoh/exterior.hpp"
#include "torcoh/intalg.hpp"
#include "torcoh/linalg.hpp"

namespace torcoh {

SpectralPage build_e1(const IntersectionPoset& poset) {
  SpectralPage page;
  for (const PosetElement& e : poset.elements)
    page.max_dim = std::max(page.max_dim, e.torus.dim());
  for (std::size_t p = 0;; ++p) {
    std::vector<Chain> level = chains(poset, p);
    if (level.empty()) break;
    std::vector<std::size_t> deep(level.size());
    for (std::size_t c = 0; c < level.size(); ++c)
      deep[c] = poset.elements[level[c].back()].torus.dim();
    page.chains_by_p.push_back(std::move(level));
    page.deepest_dim.push_back(std::move(deep));
  }
  for (std::size_t p = 0; p < page.chains_by_p.size(); ++p)
    for (std::size_t q = 0; q <= page.max_dim; ++q) {
      std::size_t total = 0;
      for (std::size_t d : page.deepest_dim[p]) total += binom(d, q);
      if (total) page.dims[{p, q}] = total;
    }
  return page;
}

std::vector<std::size_t> chain_offsets(const SpectralPage& page, std::size_t p, std::size_t q) {
  const auto& deep = page.deepest_dim[p];
  std::vector<std::size_t> off(deep.size());
  std::size_t acc = 0;
  for (std::size_t c = 0; c < deep.size(); ++c) {
    off[c] = acc;
    acc += binom(deep[c], q);
  }
  return off;
}

std::pair<std::size_t, std::size_t> basis_label(const SpectralPage& page, std::size_t p,
                                                std::size_t q, std::size_t index) {
  const auto& deep = page.deepest_dim[p];
  std::size_t acc = 0;
  for (std::size_t c = 0; c < deep.size(); ++c) {
    std::size_t width = binom(deep[c], q);
    if (index < acc + width) return {c, index - acc};
    acc += width;
  }
  throw InputError("basis_label: index out of range");
}

Differentials build_d1(const SpectralPage& page, const IntersectionPoset& poset) {
  Differentials d1;
  std::map<std::pair<std::size_t, std::size_t>, IntMat> inclusion;
  auto inclusion_of = [&](std::size_t big, std::size_t small) -> const IntMat& {
    auto key = std::make_pair(big, small);
    auto it = inclusion.find(key);
    if (it != inclusion.end()) return it->second;
    auto x = solve_rows_integer(poset.elements[big].torus.direction.basis(),
                                poset.elements[small].torus.direction.basis());
    if (!x) throw InconsistencyError("chain step is not a sublattice inclusion");
    return inclusion.emplace(key, std::move(*x)).first->second;
  };

  for (std::size_t p = 1; p < page.chains_by_p.size(); ++p) {
    std::map<Chain, std::size_t> face_index;
    for (std::size_t c = 0; c < page.chains_by_p[p - 1].size(); ++c)
      face_index[page.chains_by_p[p - 1][c]] = c;
    for (std::size_t q = 0; q <= page.max_dim; ++q) {
      std::size_t src_dim = page.dim(p, q);
      if (!src_dim) continue;
      IntMat m(src_dim, page.dim(p - 1, q));
      auto src_off = chain_offsets(page, p, q);
      auto dst_off = chain_offsets(page, p - 1, q);
      for (std::size_t c = 0; c < page.chains_by_p[p].size(); ++c) {
        const Chain& chain = page.chains_by_p[p][c];
        std::size_t width = binom(page.deepest_dim[p][c], q);
        if (!width) continue;
        for (std::size_t j = 0; j <= p; ++j) {
          Chain face = chain;
          face.erase(face.begin() + static_cast<long>(j));
          std::size_t t = face_index.at(face);
          Int sign = (j % 2 == 0) ? 1 : -1;
          if (j < p) {
            for (std::size_t w = 0; w < width; ++w)
              m(src_off[c] + w, dst_off[t] + w) += sign;
          } else {
            IntMat wedge = exterior_power(inclusion_of(chain[p - 1], chain[p]),
                                          q);
            for (std::size_t w = 0; w < wedge.rows(); ++w)
              for (std::size_t v = 0; v < wedge.cols(); ++v)
                m(src_off[c] + w, dst_off[t] + v) += sign * wedge(w, v);
          }
        }
      }
      d1.maps[{p, q}] = std::move(m);
    }
  }
  return d1;
}

std::map<std::pair<std::size_t, std::size_t>, std::size_t> e2_dimensions(
    const SpectralPage& page, const Differentials& d1) {
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> ranks;
  for (const auto& [key, m] : d1.maps) ranks[key] = field_rank(to_rat(m));
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> e2;
  for (const auto& [key, dim] : page.dims) {
    auto [p, q] = key;
    std::size_t out = ranks.count({p, q}) ? ranks[{p, q}] : 0;
    std::size_t in = ranks.count({p + 1, q}) ? ranks[{p + 1, q}] : 0;
    std::size_t val = dim - out - in;
    if (val) e2[key] = val;
  }
  return e2;
}

BettiVector compute_betti(const SpectralPage& page, const Differentials& d1,
                          const CollapseAssist* assist) {
  auto e2 = e2_dimensions(page, d1);

  std::set<std::size_t> columns;
  for (const auto& [key, dim] : e2) columns.insert(key.first);

  // Higher differentials d_r: (p,q) -> (p-r, q+r-1) that could be nonzero
  // on dimension grounds.
  struct Pair {
    std::size_t sp, sq, tp, tq, cap;
  };
  std::vector<Pair> pairs;
  for (const auto& [skey, sdim] : e2)
    for (std::size_t r = 2; r <= skey.first; ++r) {
      auto tkey = std::make_pair(skey.first - r, skey.second + r - 1);
      auto it = e2.find(tkey);
      if (it == e2.end()) continue;
      pairs.push_back({skey.first, skey.second, tkey.first, tkey.second,
                       std::min(sdim, it->second)});
    }

  BettiVector result;
  result.b.assign(page.max_dim + 1, 0);
  for (const auto& [key, dim] : e2) {
    if (key.first + key.second > page.max_dim)
      throw InconsistencyError("spectral block beyond the arrangement dimension");
    result.b[key.first + key.second] += dim;
  }
  result.lower = result.b;

  if (pairs.empty()) {
    result.certificate = columns.size() <= 2 ? CollapseCertificate::two_columns
                                             : CollapseCertificate::d2_zero_by_support;
    return result;
  }

  bool all_disjoint = assist != nullptr;
  for (const Pair& pr : pairs) {
    if (!all_disjoint) break;
    auto s = assist->support.find({pr.sp, pr.sq});
    auto t = assist->support.find({pr.tp, pr.tq});
    if (s == assist->support.end() || t == assist->support.end()) {
      all_disjoint = false;
      break;
    }
    for (const std::string& label : s->second)
      if (t->second.count(label)) {
        all_disjoint = false;
        break;
      }
  }
  if (all_disjoint) {
    result.certificate = CollapseCertificate::d2_zero_by_symmetry;
    return result;
  }

  result.certificate = CollapseCertificate::unresolved;
  for (const Pair& pr : pairs) {
    std::size_t sn = pr.sp + pr.sq, tn = pr.tp + pr.tq;
    result.lower[sn] = result.lower[sn] > pr.cap ? result.lower[sn] - pr.cap : 0;
    result.lower[tn] = result.lower[tn] > pr.cap ? result.lower[tn] - pr.cap : 0;
  }
  return result;
}

std::vector<std::size_t> betti_2d_closed_form(std::size_t m, std::size_t p,
                                              const std::map<std::size_t, std::size_t>& n_k) {
  std::size_t extra = 0;
  for (const auto& [k, count] : n_k) extra += (k - 1) * count;
  return {p, m + p + extra, m};
}

std::map<std::pair<std::size_t, std::size_t>, std::vector<Int>> torsion_diagnostics(
    const Differentials& d1) {
  std::map<std::pair<std::size_t, std::size_t>, std::vector<Int>> torsion;
  for (const auto& [key, m] : d1.maps) {
    if (!m.rows() || !m.cols()) continue;
    SmithResult s = smith_normal_form(m);
    std::vector<Int> nontrivial;
    for (const Int& inv : s.invariants)
      if (inv != 1) nontrivial.push_back(inv);
    if (!nontrivial.empty()) torsion[key] = nontrivial;
  }
  return torsion;
}

}  // namespace torcoh
