#pragma once

#include <string>
#include <string_view>

#include "incol/graph.hpp"

namespace incol {

class IncidenceColoring;

/// Largest order representable with a single-byte graph6 length.
inline constexpr int kGraph6MaxOrder = 62;

/// Decodes one graph6 word, with or without the ">>graph6<<" header. A single
/// trailing newline is tolerated. Throws ParseError with the failing byte offset.
Graph parse_graph6(std::string_view text);

/// Canonical graph6 word (no header, no newline). Throws GraphError when n > 62.
std::string to_graph6(const Graph& g);

/// Plain edge-list text: first line "n m", then m lines "u v". Blank lines and
/// lines starting with '#' are skipped.
Graph parse_edge_list(std::string_view text);
std::string to_edge_list(const Graph& g);

/// Accepts either format: text whose first significant character is a digit is
/// an edge list, anything else is graph6.
Graph parse_graph_auto(std::string_view text);

/// Graphviz rendering. With a coloring, each edge u -- v carries the color of
/// arc (u,v) as taillabel and of arc (v,u) as headlabel.
std::string to_dot(const Graph& g, const IncidenceColoring* coloring = nullptr);

}  // namespace incol
