#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "torcoh/catalog.hpp"
#include "torcoh/complement.hpp"
#include "torcoh/equivariant.hpp"

namespace torcoh {

enum class OutputFormat { text, structured };

struct RenderOptions {
  OutputFormat format = OutputFormat::text;
  bool quiet = false;
};

// Everything computed for one arrangement. The symmetry fields are filled
// when the input declares group generators; the complement report then
// uses the equivariant collapse and rank assists.
struct PipelineResult {
  ArrangementInput input;
  IntersectionPoset poset;
  SpectralPage page;
  Differentials d1;
  ComplementReport complement;
  std::optional<SymmetryData> sym;
  std::optional<EquivariantReport> equivariant;
};

// Runs poset -> spectral -> complement, plus the equivariant layer when
// generators are present. A bundled character table is chosen by group
// order (1 or 120); other orders throw InputError.
PipelineResult run_pipeline(ArrangementInput input);

// "0" for the zero representation, else e.g. "A + 2G + 2H" (text) or
// "A:1 G:2 H:2" (structured key-value form).
std::string format_decomposition(const IrrepDecomposition& d, OutputFormat format);

void render_list(std::ostream& out, const RenderOptions& opt);
void render_betti(std::ostream& out, const PipelineResult& r, const RenderOptions& opt);
void render_combinatorial_betti(std::ostream& out, const CatalogEntry& e,
                                const RenderOptions& opt);
void render_poset(std::ostream& out, const PipelineResult& r, const RenderOptions& opt);
void render_spectral(std::ostream& out, const PipelineResult& r, const RenderOptions& opt);
void render_equivariant(std::ostream& out, const PipelineResult& r, const RenderOptions& opt);

// Recomputes an entry and compares against its pinned results; returns
// true when everything matches, else fills `mismatches` with one line per
// disagreeing field.
bool verify_entry(const CatalogEntry& e, std::vector<std::string>& mismatches);

}  // namespace torcoh
