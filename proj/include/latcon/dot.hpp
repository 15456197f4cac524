#pragma once

#include <string>
#include <vector>

#include "latcon/lattice.hpp"
#include "latcon/planar.hpp"

namespace latcon {

// Graphviz digraph, bottom to top. Covers listed in `highlight` get
// penwidth=3, all others penwidth=1. With a diagram, each rank becomes a
// rank=same group ordered by xpos.
std::string to_dot(const std::string& name, const FiniteLattice& lattice,
                   const PlanarDiagram* diagram = nullptr,
                   const std::vector<PrimeInterval>& highlight = {});

}  // namespace latcon
