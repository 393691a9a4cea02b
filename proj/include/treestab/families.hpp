#pragma once

#include "treestab/graph.hpp"

#include <cstdint>

namespace treestab::families {

Graph complete(int n);
/// Part A is 0..m-1, part B is m..m+n-1.
Graph complete_bipartite(int m, int n);
Graph cycle(int n);
Graph path(int n);
Graph star(int leaves);

// Fixed labelings, vertex i here is label i+1 of the standard drawings:
//   gem:    hub 0 joined to the path 1-2-3-4
//   house:  cycle 0-1-2-3-4 with chord 1-3 (roof apex 2)
//   domino: cycle 0-1-2-3-4-5 with chord 0-3
Graph gem();
Graph house();
Graph domino();

/// G(n, p) conditioned on connectivity (by rejection); falls back to a random
/// recursive tree plus G(n, p) edges when rejection keeps failing.
Graph random_connected(int n, double p, std::uint64_t seed);

}  // namespace treestab::families
