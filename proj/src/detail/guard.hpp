#pragma once

#include <string>

#include "incol/errors.hpp"
#include "incol/graph.hpp"

namespace incol::detail {

// A negative guard disables the check.
inline void enforce_arc_guard(const Graph& g, int arc_guard) {
  const auto arc_count = 2 * g.edges().size();
  if (arc_guard >= 0 && arc_count > static_cast<std::size_t>(arc_guard)) {
    throw TooLargeError("instance has " + std::to_string(arc_count) + " arcs, guard is " + std::to_string(arc_guard));
  }
}

}  // namespace incol::detail
