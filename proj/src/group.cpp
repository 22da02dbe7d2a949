#include "torcoh/group.hpp"

#include <algorithm>
#include <map>

#include "torcoh/intalg.hpp"

namespace torcoh {

namespace {

RatVec reduce_mod_one(RatVec v) {
  for (auto& x : v) x = rat_frac(x);
  return v;
}

bool trans_is_zero(const GroupElement& e) { return vec_is_zero(e.trans); }

struct ElementLess {
  bool operator()(const GroupElement& a, const GroupElement& b) const {
    return element_less(a, b);
  }
};

}  // namespace

GroupElement identity_element(std::size_t ambient) {
  return GroupElement{IntMat::identity(ambient), RatVec(ambient, Rat(0))};
}

GroupElement compose(const GroupElement& a, const GroupElement& b) {
  GroupElement r;
  r.mat = mul(a.mat, b.mat);
  r.trans = reduce_mod_one(vec_add(mul_row(a.trans, to_rat(b.mat)), b.trans));
  return r;
}

GroupElement inverse(const GroupElement& e) {
  auto minv = solve_rows_integer(e.mat, IntMat::identity(e.mat.rows()));
  if (!minv) throw InputError("group element matrix is not unimodular");
  GroupElement r;
  r.mat = *minv;
  RatVec t = mul_row(e.trans, to_rat(r.mat));
  for (auto& x : t) x = -x;
  r.trans = reduce_mod_one(t);
  return r;
}

bool element_equal(const GroupElement& a, const GroupElement& b) {
  return a.mat == b.mat && a.trans == b.trans;
}

bool element_less(const GroupElement& a, const GroupElement& b) {
  for (std::size_t i = 0; i < a.mat.rows(); ++i)
    for (std::size_t j = 0; j < a.mat.cols(); ++j) {
      if (a.mat(i, j) != b.mat(i, j)) return a.mat(i, j) < b.mat(i, j);
    }
  for (std::size_t i = 0; i < a.trans.size(); ++i)
    if (a.trans[i] != b.trans[i]) return a.trans[i] < b.trans[i];
  return false;
}

FiniteMatrixGroup generate_group(std::size_t ambient, const std::vector<GroupElement>& gens,
                                 std::size_t bound) {
  for (const auto& g : gens) {
    if (g.mat.rows() != ambient || g.mat.cols() != ambient || g.trans.size() != ambient)
      throw InputError("group generator has the wrong ambient dimension");
    Int d = det(g.mat);
    if (d != 1 && d != -1) throw InputError("group generator is not unimodular");
  }
  FiniteMatrixGroup g;
  g.ambient = ambient;
  std::map<GroupElement, std::size_t, ElementLess> index;
  auto add = [&](const GroupElement& e) -> bool {
    if (index.count(e)) return false;
    index.emplace(e, g.elements.size());
    g.elements.push_back(e);
    return true;
  };
  add(identity_element(ambient));
  std::vector<GroupElement> norm_gens;
  for (const auto& gen : gens) {
    GroupElement e = gen;
    e.trans = reduce_mod_one(e.trans);
    norm_gens.push_back(e);
  }
  for (std::size_t head = 0; head < g.elements.size(); ++head) {
    GroupElement cur = g.elements[head];
    for (const auto& gen : norm_gens) {
      GroupElement next = compose(cur, gen);
      if (add(next) && g.elements.size() > bound)
        throw InputError("group generation exceeded the element bound");
    }
  }
  for (const auto& gen : norm_gens) g.generator_ids.push_back(index.at(gen));

  g.inverse_of.resize(g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    auto it = index.find(inverse(g.elements[i]));
    if (it == index.end()) throw InconsistencyError("group closure is missing an inverse");
    g.inverse_of[i] = it->second;
  }

  g.class_of.assign(g.order(), g.order());
  for (std::size_t i = 0; i < g.order(); ++i) {
    if (g.class_of[i] != g.order()) continue;
    std::size_t cls = g.classes.size();
    std::vector<std::size_t> members;
    for (std::size_t h = 0; h < g.order(); ++h) {
      GroupElement c =
          compose(compose(g.elements[g.inverse_of[h]], g.elements[i]), g.elements[h]);
      std::size_t id = index.at(c);
      if (g.class_of[id] == g.order()) {
        g.class_of[id] = cls;
        members.push_back(id);
      }
    }
    std::sort(members.begin(), members.end());
    g.classes.push_back(members);
    g.class_rep.push_back(members.front());
  }
  return g;
}

std::size_t matrix_order(const IntMat& m, std::size_t bound) {
  IntMat id = IntMat::identity(m.rows());
  IntMat p = m;
  for (std::size_t k = 1; k <= bound; ++k) {
    if (p == id) return k;
    p = mul(p, m);
  }
  throw InputError("matrix order exceeds bound");
}

std::size_t CharacterTable::order() const {
  std::size_t n = 0;
  for (auto s : class_sizes) n += s;
  return n;
}

CharacterTable icosahedral_z2_table() {
  CharacterTable t;
  t.names = {"A", "A'", "T1", "T1'", "T2", "T2'", "G", "G'", "H", "H'"};
  t.degrees = {1, 1, 3, 3, 3, 3, 4, 4, 5, 5};
  t.class_names = {"E", "C2", "C3", "C5", "C5^2", "zE", "zC2", "zC3", "zC5", "zC5^2"};
  t.class_sizes = {1, 15, 20, 12, 12, 1, 15, 20, 12, 12};
  t.class_marks = {{1, false}, {2, false}, {3, false}, {5, false}, {5, false},
                   {1, true},  {2, true},  {3, true},  {5, true},  {5, true}};
  const Quad phi(Rat(1, 2), Rat(1, 2), 5);
  const Quad psi(Rat(1, 2), Rat(-1, 2), 5);  // 1 - phi
  std::vector<std::vector<Quad>> base = {
      {1, 1, 1, 1, 1},
      {3, -1, 0, phi, psi},
      {3, -1, 0, psi, phi},
      {4, 0, 1, -1, -1},
      {5, 1, -1, 0, 0},
  };
  for (const auto& row : base) {
    std::vector<Quad> plain = row, primed = row;
    for (const auto& v : row) plain.push_back(v);
    for (const auto& v : row) primed.push_back(-v);
    t.chi.push_back(plain);
    t.chi.push_back(primed);
  }
  validate_table(t);
  return t;
}

CharacterTable trivial_table() {
  CharacterTable t;
  t.names = {"A"};
  t.degrees = {1};
  t.class_names = {"E"};
  t.class_sizes = {1};
  t.class_marks = {{1, false}};
  t.chi = {{Quad(1)}};
  return t;
}

void validate_table(const CharacterTable& t) {
  std::size_t n = t.order();
  std::size_t degsq = 0;
  for (std::size_t r = 0; r < t.irrep_count(); ++r) {
    degsq += t.degrees[r] * t.degrees[r];
    if (!(t.chi[r][0] == Quad(Int(t.degrees[r]))))
      throw InconsistencyError("character table degree mismatch on " + t.names[r]);
  }
  if (degsq != n) throw InconsistencyError("character table degrees do not sum to the order");
  for (std::size_t r = 0; r < t.irrep_count(); ++r)
    for (std::size_t s = r; s < t.irrep_count(); ++s) {
      Quad acc(0);
      for (std::size_t c = 0; c < t.class_count(); ++c)
        acc += Quad(Int(t.class_sizes[c])) * t.chi[r][c] * t.chi[s][c];
      Quad want = r == s ? Quad(Int(n)) : Quad(0);
      if (!(acc == want))
        throw InconsistencyError("character table rows " + t.names[r] + ", " + t.names[s] +
                                 " fail orthogonality");
    }
}

std::vector<std::size_t> match_classes(const FiniteMatrixGroup& g, const CharacterTable& t) {
  if (g.order() != t.order()) throw InputError("group order does not match the character table");
  if (g.classes.size() != t.class_count())
    throw InputError("class count does not match the character table");

  std::vector<std::size_t> map(g.classes.size(), t.class_count());
  std::vector<bool> taken(t.class_count(), false);
  // Marks of each group class, in order of first-encountered representative.
  std::vector<std::pair<std::size_t, bool>> marks(g.classes.size());
  for (std::size_t c = 0; c < g.classes.size(); ++c) {
    const GroupElement& rep = g.elements[g.class_rep[c]];
    marks[c] = {matrix_order(rep.mat), !trans_is_zero(rep)};
  }
  // Translation classes must follow their matrix class, so resolve the
  // translation-free classes first, in representative order.
  std::vector<std::size_t> order_of_classes;
  for (std::size_t c = 0; c < g.classes.size(); ++c)
    if (!marks[c].second) order_of_classes.push_back(c);
  for (std::size_t c = 0; c < g.classes.size(); ++c)
    if (marks[c].second) order_of_classes.push_back(c);

  for (std::size_t c : order_of_classes) {
    std::size_t pick = t.class_count();
    if (marks[c].second) {
      // Find the translation-free class with the same matrix, then take the
      // translation column aligned with that class's column.
      const IntMat& m = g.elements[g.class_rep[c]].mat;
      std::size_t base_cls = g.classes.size();
      for (std::size_t i = 0; i < g.order(); ++i)
        if (g.elements[i].mat == m && trans_is_zero(g.elements[i])) {
          base_cls = g.class_of[i];
          break;
        }
      if (base_cls != g.classes.size() && map[base_cls] != t.class_count()) {
        const std::string& base_name = t.class_names[map[base_cls]];
        for (std::size_t col = 0; col < t.class_count(); ++col)
          if (!taken[col] && t.class_marks[col] == marks[c] &&
              t.class_names[col] == "z" + base_name) {
            pick = col;
            break;
          }
      }
    }
    if (pick == t.class_count()) {
      for (std::size_t col = 0; col < t.class_count(); ++col)
        if (!taken[col] && t.class_marks[col] == marks[c]) {
          pick = col;
          break;
        }
    }
    if (pick == t.class_count() || t.class_sizes[pick] != g.classes[c].size())
      throw InputError("group classes do not fit the character table");
    taken[pick] = true;
    map[c] = pick;
  }
  return map;
}

std::size_t IrrepDecomposition::total(const CharacterTable& t) const {
  std::size_t n = 0;
  for (std::size_t r = 0; r < t.irrep_count(); ++r) {
    auto it = mult.find(t.names[r]);
    if (it != mult.end()) n += it->second * t.degrees[r];
  }
  return n;
}

IrrepDecomposition decompose(const std::vector<Quad>& character, const CharacterTable& t) {
  if (character.size() != t.class_count())
    throw InputError("character length does not match the table");
  IrrepDecomposition d;
  const Quad order{Int(t.order())};
  for (std::size_t r = 0; r < t.irrep_count(); ++r) {
    Quad acc(0);
    for (std::size_t c = 0; c < t.class_count(); ++c)
      acc += Quad(Int(t.class_sizes[c])) * t.chi[r][c] * character[c];
    Quad m = acc / order;
    if (!m.is_rational() || !is_integer(m.a) || m.a < 0)
      throw InconsistencyError("irrep " + t.names[r] + " has non-integral multiplicity " +
                               quad_to_string(m));
    unsigned long v = m.a.get_num().get_ui();
    if (v > 0) d.mult[t.names[r]] = v;
  }
  return d;
}

SymmetryData make_symmetry(std::size_t ambient, const std::vector<GroupElement>& gens,
                           const CharacterTable& table) {
  SymmetryData s;
  s.group = generate_group(ambient, gens);
  s.table = table;
  validate_table(s.table);
  s.class_map = match_classes(s.group, s.table);
  return s;
}

}  // namespace torcoh
