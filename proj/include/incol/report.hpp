#pragma once

#include <optional>
#include <string>
#include <vector>

#include "incol/bounds.hpp"
#include "incol/decomp.hpp"
#include "incol/incidence.hpp"
#include "incol/structure.hpp"

namespace incol {

enum class ExactMode {
  automatic,  ///< solve when 2|E| is within the guard
  force,      ///< solve regardless of the guard
  skip,
};

struct ReportOptions {
  bool planar = false;
  std::optional<std::vector<Vertex>> ordering;
  ExactMode exact = ExactMode::automatic;
  int arc_guard = kDefaultArcGuard;
};

struct ReportBound {
  std::string name;
  int value = 0;
  std::string hypothesis;
  std::optional<Rational> exact_value;  ///< set when the bound is a ceiling of a fraction
};

/// Every lower bound, every upper bound and (when in range) the exact value
/// for one graph. Lower bounds are sorted tightest first, as are upper bounds;
/// ties are broken by name.
struct BoundReport {
  StructureReport structure;
  std::optional<DominationResult> domination;
  std::optional<StarArboricityResult> star_arboricity;
  std::optional<ChromaticIndexResult> chromatic_index;
  std::optional<StarForestBound> star_forest;
  std::vector<ReportBound> lower;
  std::vector<ReportBound> upper;
  std::optional<ExactResult> exact;
  std::optional<NecVerdict> nec;
  std::vector<std::string> warnings;
};

/// Throws IntegrityError if an exact value falls outside a reported bound.
BoundReport build_bound_report(const Graph& g, const ReportOptions& options = {});

}  // namespace incol
