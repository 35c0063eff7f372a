#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pardfs/components.hpp"
#include "pardfs/graph.hpp"
#include "pardfs/meter.hpp"

namespace pardfs {

// Batch-decremental maximal spanning forest with edge levels. The level-i
// forest is the set of tree edges with level <= i; its components have at
// most 2^i vertices, and the topmost level is a maximal spanning forest of
// the remaining graph. A non-tree edge at level i has both endpoints in
// one level-i component. Replacement search walks the smaller side of a
// split and demotes failed candidates, so every edge is scanned O(log n)
// times over its lifetime.
class LevelForest {
public:
    struct DeleteResult {
        std::vector<EdgeId> removed_tree_edges;
        std::vector<EdgeId> replacement_edges;
    };

    explicit LevelForest(const Graph& g, std::uint64_t seed = 0,
                         WorkDepthMeter& meter = null_meter());

    int top_level() const { return top_level_; }
    bool edge_alive(EdgeId e) const { return alive_edge_[e]; }
    bool vertex_alive(Vertex v) const { return alive_vertex_[v]; }
    bool is_tree_edge(EdgeId e) const { return alive_edge_[e] && is_tree_[e]; }
    int edge_level(EdgeId e) const { return level_[e]; }
    int num_alive_vertices() const { return alive_vertex_count_; }

    DeleteResult batch_delete(const std::vector<EdgeId>& edges,
                              WorkDepthMeter& meter = null_meter());
    // Deletes every incident edge, then tombstones the vertices.
    DeleteResult batch_delete_vertices(const std::vector<Vertex>& vertices,
                                       WorkDepthMeter& meter = null_meter());

    std::vector<EdgeId> tree_edges() const;
    // Labeling of alive vertices by top-level forest component.
    CcLabeling forest_components() const;

    // Test hooks.
    bool check_level_invariant() const;
    bool check_maximality() const;

private:
    const Graph* g_;
    int top_level_;
    std::vector<bool> alive_edge_, alive_vertex_, is_tree_, doomed_;
    int alive_vertex_count_ = 0;
    std::vector<int> level_;                           // index by edge id
    std::vector<std::vector<EdgeId>> tree_adj_;        // lazy, validated on scan
    std::vector<std::unordered_map<int, std::vector<EdgeId>>> nt_buckets_;  // per vertex: level -> edges
    std::vector<int> side_mark_;
    int epoch_ = 0;

    void delete_one_tree_edge(EdgeId e, DeleteResult& res, WorkDepthMeter& meter);
    // Smaller side of the level-i forest split between u and v (e removed).
    std::vector<Vertex> smaller_side(Vertex u, Vertex v, int lvl, WorkDepthMeter& meter) const;
    void push_nt(EdgeId e);
    void compact_tree_adj(Vertex v);
};

}  // namespace pardfs
