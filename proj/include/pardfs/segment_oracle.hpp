#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pardfs/graph.hpp"
#include "pardfs/level_forest.hpp"
#include "pardfs/meter.hpp"
#include "pardfs/rc_tree.hpp"

namespace pardfs {

// Connectivity oracle for the remainder graph while a rooted segment is
// grown: a batch-decremental maximal spanning forest plus a
// rake-and-compress mirror of that forest. The mirror carries two
// augmentations per component: whether any marked (separator) vertex is
// left in it, and the deepest segment vertex adjacent to it.
class SegmentOracle {
public:
    // qflag marks the vertices the caller still wants to reach (1-based,
    // size n+1). Everything starts in the remainder; absorb() moves
    // vertices out.
    SegmentOracle(const Graph& g, const std::vector<bool>& qflag, std::uint64_t seed,
                  WorkDepthMeter& meter = null_meter());

    // Moves vertices into the segment at the given depths: removes them
    // and their incident edges from the remainder, patches the forest
    // mirror with the replacement edges, and lets surviving neighbors
    // learn the depth of their new segment neighbors.
    void absorb(const std::vector<Vertex>& vertices, const std::vector<int>& depths,
                WorkDepthMeter& meter = null_meter());

    bool in_remainder(Vertex v) const { return lf_.vertex_alive(v); }
    int remainder_size() const { return lf_.num_alive_vertices(); }

    // First remainder component still holding a marked vertex, if any.
    std::optional<int> find_cc(WorkDepthMeter& meter = null_meter()) const {
        return rc_.find_cc(meter);
    }
    RcTree::LowestInfo lowest_node(int comp, WorkDepthMeter& meter = null_meter()) const {
        return rc_.lowest_node(comp, meter);
    }
    // Forest path from x to a marked vertex with unmarked interior.
    std::vector<Vertex> find_path_s2p(int comp, Vertex x,
                                      WorkDepthMeter& meter = null_meter()) const {
        return rc_.find_path_s2p(comp, x, meter);
    }
    int component_of(Vertex v) const { return rc_.component_of(v); }

    void set_flag(Vertex v, bool f, WorkDepthMeter& meter = null_meter()) {
        rc_.set_vertex_flag(v, f, meter);
    }
    bool flag(Vertex v) const { return rc_.vertex_flag(v); }

    const LevelForest& forest() const { return lf_; }
    const RcTree& rc() const { return rc_; }

    // Test hook: forest components agree with the mirror, and a component
    // is reported marked iff it contains a marked vertex.
    bool check_invariants() const;

private:
    const Graph* g_;
    LevelForest lf_;
    RcTree rc_;
};

}  // namespace pardfs
