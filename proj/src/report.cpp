#include "torcoh/report.hpp"

#include <algorithm>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "torcoh/errors.hpp"

namespace torcoh {
namespace {

CharacterTable pick_table(std::size_t order) {
  if (order == 1) return trivial_table();
  if (order == 120) return icosahedral_z2_table();
  throw InputError("no bundled character table for a symmetry group of order " +
                   std::to_string(order));
}

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
  return os.str();
}

std::string format_interval(const RankInterval& r) {
  if (r.exact) return std::to_string(r.lower);
  return std::to_string(r.lower) + ".." + std::to_string(r.upper);
}

std::string format_intervals(const std::vector<RankInterval>& v) {
  std::ostringstream os;
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << format_interval(v[i]);
  return os.str();
}

const char* certificate_name(CollapseCertificate c) {
  switch (c) {
    case CollapseCertificate::two_columns:
      return "two_columns";
    case CollapseCertificate::d2_zero_by_support:
      return "d2_zero_by_support";
    case CollapseCertificate::d2_zero_by_symmetry:
      return "d2_zero_by_symmetry";
    default:
      return "unresolved";
  }
}

// E2 keys in reading order: total degree descending, then p ascending.
std::vector<std::pair<std::size_t, std::size_t>> table_order(
    const std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition>& e2) {
  std::vector<std::pair<std::size_t, std::size_t>> keys;
  for (const auto& [key, content] : e2) keys.push_back(key);
  std::sort(keys.begin(), keys.end(), [](const auto& a, const auto& b) {
    std::size_t ta = a.first + a.second, tb = b.first + b.second;
    return ta != tb ? ta > tb : a.first < b.first;
  });
  return keys;
}

void render_betti_block(std::ostream& out, const ComplementReport& rep, OutputFormat format) {
  if (format == OutputFormat::structured) {
    out << "betti_union = " << join(rep.betti_a.b) << "\n";
    out << "certificate = " << certificate_name(rep.betti_a.certificate) << "\n";
    out << "c = " << format_intervals(rep.c) << "\n";
    out << "exact = " << (rep.exact ? "true" : "false") << "\n";
    if (rep.exact) {
      out << "betti_complement = " << join(rep.betti) << "\n";
    } else {
      out << "betti_complement_lower = " << join(rep.betti_lower) << "\n";
      out << "betti_complement_upper = " << join(rep.betti_upper) << "\n";
    }
    return;
  }
  out << "b(union)      = " << join(rep.betti_a.b) << "   [" <<
      certificate_name(rep.betti_a.certificate) << "]\n";
  out << "c             = " << format_intervals(rep.c) << "\n";
  if (rep.exact) {
    out << "b(complement) = " << join(rep.betti) << "\n";
  } else {
    out << "b(complement) in [" << join(rep.betti_lower) << "] .. [" << join(rep.betti_upper)
        << "]\n";
  }
}

void render_header(std::ostream& out, const PipelineResult& r, OutputFormat format) {
  const Arrangement& a = r.input.arrangement;
  if (format == OutputFormat::structured) {
    out << "entry = " << a.name << "\n";
    out << "ambient = " << a.ambient << "\n";
    out << "tori = " << a.tori.size() << "\n";
    out << "components = " << components(r.poset) << "\n";
  } else {
    out << a.name << ": " << a.tori.size() << " tori in T^" << a.ambient << ", "
        << components(r.poset) << " component(s) of the union\n";
  }
}

template <typename Map>
void render_orbit_map(std::ostream& out, const Map& orbits, const std::string& prefix,
                      OutputFormat format) {
  for (auto it = orbits.rbegin(); it != orbits.rend(); ++it) {
    if (format == OutputFormat::structured) {
      out << prefix << ".dim" << it->first << " = " << join(it->second) << "\n";
    } else {
      out << "  dim " << it->first << ": " << join(it->second) << "\n";
    }
  }
}

}  // namespace

PipelineResult run_pipeline(ArrangementInput input) {
  PipelineResult r;
  r.input = std::move(input);
  r.poset = build_poset(r.input.arrangement);
  r.page = build_e1(r.poset);
  r.d1 = build_d1(r.page, r.poset);
  if (!r.input.generators.empty()) {
    FiniteMatrixGroup group = generate_group(r.input.arrangement.ambient, r.input.generators);
    CharacterTable table = pick_table(group.order());
    std::vector<std::size_t> class_map = match_classes(group, table);
    r.sym = SymmetryData{std::move(group), std::move(table), std::move(class_map)};
    r.equivariant = equivariant_report(r.poset, r.page, r.d1, *r.sym);
    r.complement = r.equivariant->complement;
  } else {
    r.complement = complement_report(r.poset, r.page, r.d1);
  }
  return r;
}

std::string format_decomposition(const IrrepDecomposition& d, OutputFormat format) {
  if (d.mult.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, mult] : d.mult) {
    if (format == OutputFormat::structured) {
      os << (first ? "" : " ") << name << ":" << mult;
    } else {
      os << (first ? "" : " + ");
      if (mult != 1) os << mult;
      os << name;
    }
    first = false;
  }
  return os.str();
}

void render_list(std::ostream& out, const RenderOptions& opt) {
  if (opt.quiet) return;
  for (const std::string& name : catalog_names()) {
    const CatalogEntry& e = catalog_get(name);
    if (opt.format == OutputFormat::structured) {
      out << "entry." << name << " = " << (e.geometric ? "geometric" : "combinatorial")
          << (e.negative_control ? " negative_control" : "") << "\n";
      continue;
    }
    out << std::left << std::setw(26) << name << (e.geometric ? "geometric     " : "combinatorial ")
        << "T^" << e.expected.ambient << ", " << e.expected.m << " tori"
        << (e.negative_control ? "  [deliberately defective]" : "") << "\n";
  }
}

void render_betti(std::ostream& out, const PipelineResult& r, const RenderOptions& opt) {
  if (opt.quiet) return;
  render_header(out, r, opt.format);
  render_betti_block(out, r.complement, opt.format);
}

void render_combinatorial_betti(std::ostream& out, const CatalogEntry& e,
                                const RenderOptions& opt) {
  if (opt.quiet) return;
  const ExpectedResults& x = e.expected;
  std::vector<std::size_t> betti = combinatorial_complement(x.m, x.p, x.n_k, *x.c2);
  if (opt.format == OutputFormat::structured) {
    out << "entry = " << e.name << "\n";
    out << "ambient = " << x.ambient << "\n";
    out << "tori = " << x.m << "\n";
    out << "components = " << x.p << "\n";
    for (const auto& [k, count] : x.n_k) out << "points.on" << k << " = " << count << "\n";
    out << "c2 = " << *x.c2 << "\n";
    out << "betti_complement = " << join(betti) << "\n";
    return;
  }
  out << e.name << ": combinatorial, " << x.m << " tori in T^" << x.ambient << ", c_2 = " << *x.c2
      << "\n";
  out << "b(complement) = " << join(betti) << "\n";
}

void render_poset(std::ostream& out, const PipelineResult& r, const RenderOptions& opt) {
  if (opt.quiet) return;
  render_header(out, r, opt.format);
  auto census = dimension_census(r.poset);
  auto points = point_multiplicities(r.poset);
  if (opt.format == OutputFormat::structured) {
    for (auto it = census.rbegin(); it != census.rend(); ++it)
      out << "census.dim" << it->first << " = " << it->second << "\n";
    for (const auto& [k, count] : points) out << "points.on" << k << " = " << count << "\n";
    out << "elements = " << r.poset.elements.size() << "\n";
    return;
  }
  for (auto it = census.rbegin(); it != census.rend(); ++it)
    out << "  dim " << it->first << ": " << it->second << " element(s)\n";
  for (const auto& [k, count] : points)
    out << "  " << count << " point(s) on exactly " << k << " input tori\n";
}

void render_spectral(std::ostream& out, const PipelineResult& r, const RenderOptions& opt) {
  if (opt.quiet) return;
  render_header(out, r, opt.format);
  auto e2 = e2_dimensions(r.page, r.d1);
  if (opt.format == OutputFormat::structured) {
    for (const auto& [key, dim] : r.page.dims)
      if (dim) out << "e1." << key.first << "." << key.second << " = " << dim << "\n";
    for (const auto& [key, dim] : e2)
      out << "e2." << key.first << "." << key.second << " = " << dim << "\n";
  } else {
    out << "E1 dimensions (p,q):\n";
    for (const auto& [key, dim] : r.page.dims)
      if (dim) out << "  (" << key.first << "," << key.second << ") = " << dim << "\n";
    out << "E2 dimensions (p,q):\n";
    for (const auto& [key, dim] : e2)
      out << "  (" << key.first << "," << key.second << ") = " << dim << "\n";
  }
  render_betti_block(out, r.complement, opt.format);
}

void render_equivariant(std::ostream& out, const PipelineResult& r, const RenderOptions& opt) {
  if (opt.quiet) return;
  if (!r.equivariant) throw InputError("the input declares no symmetry group");
  const EquivariantReport& rep = *r.equivariant;
  const CharacterTable& table = r.sym->table;
  render_header(out, r, opt.format);

  if (opt.format == OutputFormat::structured) {
    out << "group_order = " << r.sym->group.order() << "\n";
    render_orbit_map(out, rep.orbits_rotational, "orbits.rotational", opt.format);
    render_orbit_map(out, rep.orbits, "orbits.full", opt.format);
    for (const auto& key : table_order(rep.e2))
      out << "e2." << key.first << "." << key.second << " = "
          << format_decomposition(rep.e2.at(key), opt.format) << "\n";
    out << "collapse = " << (rep.collapse ? "true" : "false") << "\n";
    out << "assembled = " << (rep.assembled ? "true" : "false") << "\n";
    for (std::size_t q = 0; q < rep.h_union.size(); ++q)
      out << "h_union." << q << " = " << format_decomposition(rep.h_union[q], opt.format) << "\n";
    for (std::size_t n = 0; n < rep.wedge.size(); ++n)
      out << "h_torus." << n << " = " << format_decomposition(rep.wedge[n], opt.format) << "\n";
    for (std::size_t n = 0; n < rep.im_beta.size(); ++n)
      out << "im_beta." << n << " = " << format_decomposition(rep.im_beta[n], opt.format) << "\n";
    for (std::size_t n = 0; n < rep.h_complement.size(); ++n)
      out << "h_complement." << n << " = " << format_decomposition(rep.h_complement[n], opt.format)
          << "\n";
    render_betti_block(out, rep.complement, opt.format);
    return;
  }

  out << "group of order " << r.sym->group.order() << ", " << r.sym->group.classes.size()
      << " conjugacy classes\n";
  out << "orbits under the rotation subgroup:\n";
  render_orbit_map(out, rep.orbits_rotational, "", opt.format);
  out << "orbits under the full group:\n";
  render_orbit_map(out, rep.orbits, "", opt.format);

  auto keys = table_order(rep.e2);
  out << "\nE2 multiplicities:\n";
  out << std::left << std::setw(5) << "";
  for (const auto& key : keys) {
    std::string head = "(" + std::to_string(key.first) + "," + std::to_string(key.second) + ")";
    out << std::right << std::setw(7) << head;
  }
  out << "\n";
  for (std::size_t i = 0; i < table.names.size(); ++i) {
    out << std::left << std::setw(5) << table.names[i];
    for (const auto& key : keys) {
      auto it = rep.e2.at(key).mult.find(table.names[i]);
      out << std::right << std::setw(7)
          << (it == rep.e2.at(key).mult.end() ? "." : std::to_string(it->second));
    }
    out << "\n";
  }
  out << std::left << std::setw(5) << "dim";
  for (const auto& key : keys)
    out << std::right << std::setw(7) << rep.e2.at(key).total(table);
  out << "\n";
  out << "collapse: " << (rep.collapse ? "yes" : "no") << "  assembled: "
      << (rep.assembled ? "yes" : "no") << "\n";

  out << "\nrestriction images and torus cohomology:\n";
  for (std::size_t n = 0; n < rep.wedge.size(); ++n) {
    out << "  degree " << n << ": H(T^N) = " << format_decomposition(rep.wedge[n], opt.format)
        << "; Im beta = "
        << (n < rep.im_beta.size() ? format_decomposition(rep.im_beta[n], opt.format) : "0")
        << "\n";
  }
  out << "\ncomplement cohomology:\n";
  for (std::size_t n = 0; n < rep.h_complement.size(); ++n)
    out << "  degree " << n << ": " << format_decomposition(rep.h_complement[n], opt.format)
        << "\n";
  out << "\n";
  render_betti_block(out, rep.complement, opt.format);
}

namespace {

template <typename T>
std::string printable(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string printable(const std::vector<std::size_t>& v) { return join(v); }

std::string printable(const IrrepDecomposition& d) {
  return format_decomposition(d, OutputFormat::text);
}

std::string printable(const std::map<std::size_t, std::size_t>& m) {
  std::ostringstream os;
  for (const auto& [k, v] : m) os << "[" << k << "]=" << v << " ";
  return os.str();
}

std::string printable(const std::map<std::size_t, std::vector<std::size_t>>& m) {
  std::ostringstream os;
  for (const auto& [k, v] : m) os << "[" << k << "]=(" << join(v) << ") ";
  return os.str();
}

std::string printable(
    const std::map<std::pair<std::size_t, std::size_t>, IrrepDecomposition>& m) {
  std::ostringstream os;
  for (const auto& [k, v] : m)
    os << "[" << k.first << "," << k.second << "]=(" << printable(v) << ") ";
  return os.str();
}

template <typename T>
void compare(std::vector<std::string>& mismatches, const std::string& field, const T& expected,
             const T& got) {
  if (expected == got) return;
  mismatches.push_back(field + ": expected " + printable(expected) + ", got " + printable(got));
}

void compare_tables(std::vector<std::string>& mismatches, const std::string& field,
                    const std::vector<IrrepDecomposition>& expected,
                    const std::vector<IrrepDecomposition>& got) {
  compare(mismatches, field + " length", expected.size(), got.size());
  for (std::size_t i = 0; i < std::min(expected.size(), got.size()); ++i)
    compare(mismatches, field + "." + std::to_string(i), expected[i], got[i]);
}

}  // namespace

bool verify_entry(const CatalogEntry& e, std::vector<std::string>& mismatches) {
  const ExpectedResults& x = e.expected;
  if (!e.geometric) {
    std::vector<std::size_t> betti = combinatorial_complement(x.m, x.p, x.n_k, *x.c2);
    compare(mismatches, "betti_complement", x.betti_complement, betti);
    return mismatches.empty();
  }

  PipelineResult r = run_pipeline(e.parse());
  compare(mismatches, "ambient", x.ambient, r.input.arrangement.ambient);
  compare(mismatches, "tori", x.m, r.input.arrangement.tori.size());
  compare(mismatches, "components", x.p, components(r.poset));
  compare(mismatches, "census", x.census, dimension_census(r.poset));
  compare(mismatches, "point multiplicities", x.n_k, point_multiplicities(r.poset));
  if (x.c2) {
    compare(mismatches, "c2 exact", true, r.complement.c.size() > 2 && r.complement.c[2].exact);
    if (r.complement.c.size() > 2 && r.complement.c[2].exact)
      compare(mismatches, "c2", *x.c2, r.complement.c[2].lower);
  }
  if (!x.betti_union.empty())
    compare(mismatches, "betti_union", x.betti_union, r.complement.betti_a.b);
  compare(mismatches, "complement exact", true, r.complement.exact);
  if (r.complement.exact)
    compare(mismatches, "betti_complement", x.betti_complement, r.complement.betti);

  if (!x.e2.empty()) {
    compare(mismatches, "equivariant layer present", true, r.equivariant.has_value());
    if (r.equivariant) {
      const EquivariantReport& rep = *r.equivariant;
      compare(mismatches, "orbits rotational", x.orbits_rotational, rep.orbits_rotational);
      compare(mismatches, "orbits full", x.orbits_full, rep.orbits);
      compare(mismatches, "e2 contents", x.e2, rep.e2);
      compare(mismatches, "collapse", true, rep.collapse);
      compare(mismatches, "assembled", true, rep.assembled);
      compare_tables(mismatches, "h_torus", x.h_torus, rep.wedge);
      compare_tables(mismatches, "im_beta", x.im_beta, rep.im_beta);
      compare_tables(mismatches, "h_complement", x.h_complement, rep.h_complement);
    }
  }
  return mismatches.empty();
}

}  // namespace torcoh
