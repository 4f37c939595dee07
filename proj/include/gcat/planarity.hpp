#pragma once

#include "gcat/graph.hpp"

namespace gcat {

/// Planarity of the underlying simple graph (loops and parallel edges do not
/// affect planarity).
bool is_planar(const MultiGraph& g);

}  // namespace gcat
