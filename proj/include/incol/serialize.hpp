#pragma once

#include <optional>

#include "json.hpp"

#include "incol/decomp.hpp"
#include "incol/incidence.hpp"
#include "incol/report.hpp"

namespace incol {

/// [{"tail": u, "head": v, "color": c}, ...] in arc order.
nlohmann::json coloring_to_json(const IncidenceColoring& c);

/// Reads the array format above for graph g. Arcs may appear in any order;
/// missing arcs stay uncolored. The palette defaults to max color + 1.
/// Throws std::invalid_argument on unknown or repeated arcs and malformed entries.
IncidenceColoring coloring_from_json(const Graph& g, const nlohmann::json& j,
                                     std::optional<int> palette = std::nullopt);

nlohmann::json decomposition_to_json(const StarForestDecomposition& sfd);
nlohmann::json edge_coloring_to_json(const EdgeColoring& ec);
nlohmann::json edges_to_json(std::span<const Edge> edges);

/// {"schema": 1, "graph": {...}, "lower": [...], "upper": [...], "exact": ..., "nec": ...}
nlohmann::json report_to_json(const Graph& g, const BoundReport& report);

}  // namespace incol
