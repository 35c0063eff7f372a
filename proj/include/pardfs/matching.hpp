#pragma once

#include <cstdint>
#include <vector>

#include "pardfs/graph.hpp"
#include "pardfs/meter.hpp"

namespace pardfs {

// Maximal matching via local-max rounds: every round each live edge draws
// a hash priority and enters the matching iff it beats all adjacent live
// edges; matched and covered edges drop out. Expected logarithmically many
// rounds, deterministic for a fixed seed.
std::vector<EdgeId> maximal_matching(const Graph& g, std::uint64_t seed = 0,
                                     WorkDepthMeter& meter = null_meter());

// Postcondition predicates, checkable by exhaustive scan.
bool is_matching(const Graph& g, const std::vector<EdgeId>& m);
bool is_maximal_matching(const Graph& g, const std::vector<EdgeId>& m);

}  // namespace pardfs
