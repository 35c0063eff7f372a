#pragma once

#include <vector>

#include "pardfs/graph.hpp"
#include "pardfs/meter.hpp"

namespace pardfs {

// Decremental array of N entries under a static perfectly balanced binary
// tree. Internal nodes count active leaves below them; queries descend
// left-first, deactivation never rebalances.
class ActiveList {
public:
    ActiveList() = default;
    explicit ActiveList(std::vector<int> elements);

    int size() const { return n_; }
    int active_count() const { return n_ == 0 ? 0 : count_[1]; }
    bool slot_active(int idx) const { return active_[idx]; }  // 0-based slot
    int element(int idx) const { return elem_[idx]; }

    // Marks a single slot inactive, decrementing counts up to the root.
    // Throws if already inactive.
    void deactivate(int idx, WorkDepthMeter& meter);

    // min(t, active) distinct active elements, leftmost-first.
    std::vector<int> query(int t, WorkDepthMeter& meter) const;

    // Test hook: recheck N(v) = N(left)+N(right) everywhere.
    bool check_tree_sums() const;

private:
    int n_ = 0;
    int leaf_base_ = 1;  // leaves occupy [leaf_base_, leaf_base_+n_)
    std::vector<int> elem_;
    std::vector<bool> active_;
    std::vector<int> count_;  // implicit heap-shaped tree, count_[1] = root
    void collect(int node, int t, std::vector<int>& out) const;
};

// Per-vertex ActiveLists over neighbor arrays plus a per-edge cross index,
// supporting batched vertex deactivation and t-distinct-active-neighbor
// queries.
class ActiveGraph {
public:
    // Requires n >= 2; every vertex starts active.
    explicit ActiveGraph(const Graph& g, WorkDepthMeter& meter = null_meter());

    bool active(Vertex v) const { return active_[v]; }
    int active_neighbor_count(Vertex v) const { return lists_[v].active_count(); }

    // Marks the given distinct, currently-active vertices inactive and
    // updates every neighbor's list through the cross index. Duplicate or
    // already-inactive input is an error.
    void make_inactive(const std::vector<Vertex>& vertices,
                       WorkDepthMeter& meter = null_meter());

    // For each listed vertex, min(t, active) distinct active neighbors in
    // deterministic (left-first) order. t >= 1.
    std::vector<std::vector<Vertex>> query_active(const std::vector<Vertex>& vertices, int t,
                                                  WorkDepthMeter& meter = null_meter()) const;

    bool check_invariants() const;

private:
    const Graph* g_;
    std::vector<bool> active_;
    std::vector<ActiveList> lists_;  // lists_[v] over v's incident slots
    // cross_[e] = slot of u in v's list and slot of v in u's list.
    struct Cross {
        int slot_in_u;
        int slot_in_v;
    };
    std::vector<Cross> cross_;  // index e-1
};

}  // namespace pardfs
