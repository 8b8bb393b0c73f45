#pragma once

#include <string>

#include "posetlab/labelling.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

/// Hasse diagram in Graphviz DOT, drawn bottom-up with one `rank=same` group per
/// level (longest cover path from a minimal element). Edge labels are written when
/// a labelling is given. Output is deterministic.
std::string export_dot(const Poset& poset, const EdgeLabelling* labelling = nullptr,
                       const std::string& graph_name = "poset");

}  // namespace posetlab
