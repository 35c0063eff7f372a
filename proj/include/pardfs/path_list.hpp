#pragma once

#include <cstdint>
#include <list>
#include <vector>

#include "pardfs/graph.hpp"
#include "pardfs/meter.hpp"

namespace pardfs {

// A vertex-disjoint path stored as a doubly-linked list of vertex ids.
struct PathList {
    int id = 0;
    std::list<Vertex> nodes;

    PathList() = default;
    PathList(int id_, std::initializer_list<Vertex> vs) : id(id_), nodes(vs) {}

    int length() const { return static_cast<int>(nodes.size()); }
    bool empty() const { return nodes.empty(); }
    Vertex head() const { return nodes.front(); }
    Vertex tail() const { return nodes.back(); }
};

// Prefix sums along the list, head to tail, by pointer jumping (log-many
// batch rounds over the whole list). One value per node, in list order.
std::vector<std::int64_t> list_rank(const PathList& path,
                                    const std::vector<std::int64_t>& values,
                                    WorkDepthMeter& meter = null_meter());

// 1-based rank of v from the head plus the total node count, computed by
// ranking an all-ones copy of the list. Throws if v is not on the path.
struct PathPosition {
    int rank;
    int total;
};
PathPosition locate_on_path(const PathList& path, Vertex v,
                            WorkDepthMeter& meter = null_meter());

// Half-split rule for s = s'ys'': the prefix side counts as the long half
// iff rank(y) >= ceil(total/2).
inline bool prefix_is_long_half(const PathPosition& pos) {
    return pos.rank >= (pos.total + 1) / 2;
}

}  // namespace pardfs
