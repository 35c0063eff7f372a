#include "pardfs/matching.hpp"

#include <algorithm>

#include "pardfs/rng.hpp"

namespace pardfs {

std::vector<EdgeId> maximal_matching(const Graph& g, std::uint64_t seed,
                                     WorkDepthMeter& meter) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    std::vector<EdgeId> out;
    std::vector<bool> saturated(n + 1, false);
    std::vector<EdgeId> live;
    live.reserve(m);
    for (EdgeId e = 1; e <= m; ++e) live.push_back(e);

    std::uint64_t round = 0;
    while (!live.empty()) {
        ++round;
        meter.add_rounds(1);
        meter.add_work(live.size());
        // priority per live edge; an edge wins if it is the strict local max
        // among live edges at both endpoints (ties broken by edge id).
        auto prio = [&](EdgeId e) {
            return std::pair<std::uint64_t, EdgeId>(
                mix64(seed ^ (0x9e3779b97f4a7c15ULL * round) ^ static_cast<std::uint64_t>(e)), e);
        };
        std::vector<std::pair<std::uint64_t, EdgeId>> best_at(n + 1, {0, 0});
        for (EdgeId e : live) {
            auto p = prio(e);
            if (p > best_at[g.edge_u(e)]) best_at[g.edge_u(e)] = p;
            if (p > best_at[g.edge_v(e)]) best_at[g.edge_v(e)] = p;
        }
        for (EdgeId e : live) {
            auto p = prio(e);
            if (best_at[g.edge_u(e)] == p && best_at[g.edge_v(e)] == p) {
                out.push_back(e);
                saturated[g.edge_u(e)] = true;
                saturated[g.edge_v(e)] = true;
            }
        }
        std::vector<EdgeId> next;
        for (EdgeId e : live)
            if (!saturated[g.edge_u(e)] && !saturated[g.edge_v(e)]) next.push_back(e);
        live.swap(next);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_matching(const Graph& g, const std::vector<EdgeId>& m) {
    std::vector<bool> used(g.num_vertices() + 1, false);
    for (EdgeId e : m) {
        if (used[g.edge_u(e)] || used[g.edge_v(e)]) return false;
        used[g.edge_u(e)] = used[g.edge_v(e)] = true;
    }
    return true;
}

bool is_maximal_matching(const Graph& g, const std::vector<EdgeId>& m) {
    if (!is_matching(g, m)) return false;
    std::vector<bool> used(g.num_vertices() + 1, false);
    for (EdgeId e : m) used[g.edge_u(e)] = used[g.edge_v(e)] = true;
    for (EdgeId e = 1; e <= g.num_edges(); ++e)
        if (!used[g.edge_u(e)] && !used[g.edge_v(e)]) return false;
    return true;
}

}  // namespace pardfs
