#pragma once

#include <cstdint>
#include <string>

#include "pardfs/graph.hpp"

namespace pardfs {

// Deterministic graph families for the corpus and the CLI. Kinds: path,
// cycle, grid (params "RxC", else an n-vertex near-square), star, complete,
// lollipop (clique on half the vertices plus a tail), random-tree,
// random-gnm-connected (spanning tree plus distinct random edges up to m).
// Throws on unknown kinds or infeasible parameters.
Graph generate(const std::string& kind, int n, int m, const std::string& params,
               std::uint64_t seed);

}  // namespace pardfs
