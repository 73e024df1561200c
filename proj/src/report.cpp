#include "incol/report.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <tuple>

#include "incol/errors.hpp"

namespace incol {

BoundReport build_bound_report(const Graph& g, const ReportOptions& options) {
  BoundReport report;
  report.structure = structure_report(g, options.ordering ? std::optional<std::span<const Vertex>>(*options.ordering)
                                                          : std::nullopt);
  const int guard = options.exact == ExactMode::force ? -1 : options.arc_guard;
  const auto arc_count = 2 * g.size();

  try {
    report.domination = domination_number_exact(g, guard);
  } catch (const TooLargeError& e) {
    report.warnings.push_back(std::string("domination number skipped: ") + e.what());
  }
  try {
    report.star_arboricity = star_arboricity_exact(g, guard);
    report.chromatic_index = chromatic_index_exact(g, guard);
  } catch (const TooLargeError& e) {
    report.warnings.push_back(std::string("star arboricity / chromatic index skipped: ") + e.what());
  }
  report.star_forest = star_forest_upper_bound(g, guard);

  if (report.domination && g.size() > 0) {
    const int gamma = report.domination->gamma;
    report.lower.push_back({"domination", lower_bound_domination(g, gamma),
                            "2|E| / (|V| - gamma), gamma = " + std::to_string(gamma),
                            Rational{2LL * g.size(), static_cast<long long>(g.order() - gamma)}});
    auto& q = *report.lower.back().exact_value;
    const long long d = std::gcd(q.num, q.den);
    q.num /= d;
    q.den /= d;
    if (report.structure.regular_degree) {
      const auto r = regular_lower_bound(g, gamma);
      report.lower.push_back({"regular", static_cast<int>(r.ceiling()),
                              "r / (1 - gamma/|V|), r = " + std::to_string(*report.structure.regular_degree), r});
    }
  }

  ClassHints flags;
  flags.planar = options.planar;
  flags.ordering = options.ordering;
  auto classes = class_bounds(g, flags);
  for (auto& b : classes.lower) report.lower.push_back({b.name, b.value, b.hypothesis, std::nullopt});
  for (auto& b : classes.upper) report.upper.push_back({b.name, b.value, b.hypothesis, std::nullopt});

  const auto& t = *report.star_forest;
  std::string how = std::string("st ") + (t.star_forests == Provenance::exact ? "exact" : "first-fit") +
                    " + chi' " + (t.edge_colors == Provenance::exact ? "exact" : "Misra-Gries");
  report.upper.push_back({"star_forest", t.coloring.palette_size(), how, std::nullopt});

  if (report.structure.regular_degree && g.size() > 0) report.nec = necessary_conditions_regular(g, guard);

  if (options.exact != ExactMode::skip) {
    if (guard < 0 || arc_count <= guard) {
      ExactOptions eo;
      eo.arc_guard = guard;
      report.exact = exact_chi_i(g, eo);
    } else {
      report.warnings.push_back("exact search skipped: " + std::to_string(arc_count) + " arcs exceed guard " +
                                std::to_string(guard) + " (use --exact to force)");
    }
  }

  std::sort(report.lower.begin(), report.lower.end(),
            [](const ReportBound& a, const ReportBound& b) { return std::tie(b.value, a.name) < std::tie(a.value, b.name); });
  std::sort(report.upper.begin(), report.upper.end(),
            [](const ReportBound& a, const ReportBound& b) { return std::tie(a.value, a.name) < std::tie(b.value, b.name); });

  if (report.exact) {
    const int chi = report.exact->chi;
    for (const auto& b : report.lower)
      if (b.value > chi) throw IntegrityError("lower bound " + b.name + " exceeds the exact value");
    for (const auto& b : report.upper) {
      if (b.value >= chi) continue;
      // The planar hypothesis is the caller's word, not something we checked.
      if (b.name == "planar") report.warnings.push_back("planar declaration contradicts the exact value");
      else throw IntegrityError("upper bound " + b.name + " is below the exact value");
    }
  }
  return report;
}

}  // namespace incol
