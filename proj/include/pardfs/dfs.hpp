#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "pardfs/graph.hpp"
#include "pardfs/meter.hpp"
#include "pardfs/path_list.hpp"

namespace pardfs {

// Growing rooted tree that stays extendable to a full DFS tree: no two
// incomparable members may be linked through unabsorbed vertices.
struct InitialSegment {
    Vertex root = 0;
    std::vector<Vertex> parent;  // 1-based; parent[root] == root, 0 = absent
    std::vector<int> depth;      // -1 when absent
    int size = 0;

    bool contains(Vertex v) const {
        return v >= 1 && v < static_cast<int>(parent.size()) && parent[v] != 0;
    }
};

struct DfsConfig {
    int cutoff = 256;         // components at most this size run the stack DFS
    int small_guard = 2304;   // below this, 48*sqrt(n) paths cannot beat n
                              // singletons, so skip the separator machinery
    std::uint64_t seed = 0;
    int workers = 1;          // scheduling hint; results depend only on the seed
    bool verify_full = false; // check the segment invariant after every absorb step
};

struct StageMeters {
    WorkDepthMeter separator, absorb, recursion;
};

struct DfsResult {
    Vertex root = 0;
    std::vector<Vertex> parent;  // parent[root] == root
    WorkDepthMeter meter;
    StageMeters stages;          // work split per stage (rounds are summed)
    int recursion_depth = 0;
};

// DFS tree of a connected graph: grow an initial segment that separates
// the graph, then recurse on the halved components in parallel. Throws on
// disconnected input.
DfsResult parallel_dfs(const Graph& g, Vertex r, const DfsConfig& cfg = {});

// Stack-based DFS over the component of r, visiting neighbors in incident
// order. Doubles as the differential-testing oracle.
std::vector<Vertex> sequential_dfs(const Graph& g, Vertex r);

// Absorbs every vertex of the separator q into a segment rooted at r by
// repeatedly walking from the deepest attachment of a component still
// holding separator vertices to a separator path and taking its longer
// half. q must not contain r; its paths are consumed.
InitialSegment absorb_separator(const Graph& g, std::vector<PathList>& q, Vertex r,
                                std::uint64_t seed, bool verify_each_step = false,
                                WorkDepthMeter& meter = null_meter());

// Appends a chain below y: chain[0] becomes y's child, depths follow by
// prefix sums along the chain. Throws when consecutive vertices (or y and
// chain[0]) are not adjacent in g or a chain vertex is already absorbed.
void attach_path(InitialSegment& seg, const Graph& g, const std::vector<Vertex>& chain,
                 Vertex y, WorkDepthMeter& meter = null_meter());

// True iff parent encodes a spanning tree of g rooted at r in which every
// graph edge joins an ancestor-descendant pair (entry/exit intervals).
bool verify_dfs_tree(const Graph& g, const std::vector<Vertex>& parent, Vertex r,
                     std::string* diag = nullptr);

// True iff the segment is a valid rooted tree and, for every component of
// the unabsorbed remainder, the segment vertices adjacent to it lie on a
// single root-to-node path.
bool verify_initial_segment(const Graph& g, const InitialSegment& seg,
                            std::string* diag = nullptr);

// "v parent(v)" per line / Graphviz rendering of the tree.
void write_parent_array(std::ostream& os, const DfsResult& res);
void write_dot(std::ostream& os, const Graph& g, const DfsResult& res);

}  // namespace pardfs
