#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <optional>
#include <set>
#include <unordered_map>
#include <vector>

#include "pardfs/graph.hpp"
#include "pardfs/meter.hpp"

namespace pardfs {

// Lowest-attachment augmentation: the component vertex v whose tree
// neighbor x sits at depth d in the partial tree. d == -1 means none.
// "Lowest" is lowest in the tree drawing, i.e. greatest depth: growing a
// branch into a component must hang off the deepest adjacent tree vertex
// or the component's remaining edges into the tree would become cross
// edges. Deeper records therefore order first; ties by x then v.
struct LowAug {
    int d = -1;
    Vertex x = 0;
    Vertex v = 0;

    bool none() const { return d < 0; }
    friend bool operator<(const LowAug& a, const LowAug& b) {
        if (a.d != b.d) return a.d > b.d;
        if (a.x != b.x) return a.x < b.x;
        return a.v < b.v;
    }
    friend bool operator==(const LowAug& a, const LowAug& b) {
        return a.d == b.d && a.x == b.x && a.v == b.v;
    }
};

// Rake-and-compress hierarchy over a dynamic forest, augmented with
// separator flags and lowest-attachment records. Batch edge updates are
// repaired level by level through dirty sets: only vertices whose local
// neighborhood changed get their removal decision recomputed, so the
// resulting hierarchy is always identical to a fresh build with the same
// seed (per-vertex per-level coins are pure hash functions).
class RcTree {
public:
    RcTree(int n, std::uint64_t seed);

    // Fresh hierarchy over the given forest; flags/low are per-vertex
    // (1-based). Throws if the edges contain a cycle.
    void build(const std::vector<std::pair<Vertex, Vertex>>& edges,
               const std::vector<bool>& qflag, const std::vector<LowAug>& low,
               WorkDepthMeter& meter = null_meter());

    // Applies edge deletions and insertions; the resulting edge set must
    // still be a forest (violations throw and leave the tree unusable).
    void batch_update(const std::vector<std::pair<Vertex, Vertex>>& deletions,
                      const std::vector<std::pair<Vertex, Vertex>>& insertions,
                      WorkDepthMeter& meter = null_meter());

    // Tombstones vertices that currently have no incident edges.
    void remove_isolated(const std::vector<Vertex>& vertices,
                         WorkDepthMeter& meter = null_meter());

    void set_vertex_low(Vertex v, const LowAug& aug, WorkDepthMeter& meter = null_meter());
    void set_vertex_flag(Vertex v, bool f, WorkDepthMeter& meter = null_meter());

    bool vertex_alive(Vertex v) const { return alive_[v]; }
    bool vertex_flag(Vertex v) const { return qflag_[v]; }
    const LowAug& vertex_low(Vertex v) const { return low_[v]; }

    // Component handle = id of its root cluster.
    int component_of(Vertex v) const;
    Vertex component_rep(int comp) const { return clusters_[comp].rep; }
    bool component_flag(int comp) const { return clusters_[comp].flag; }
    std::size_t num_components() const { return comps_.size(); }

    // First component in flagged-first order if it carries the flag.
    std::optional<int> find_cc(WorkDepthMeter& meter = null_meter()) const;

    struct LowestInfo {
        Vertex v;  // component vertex adjacent to the partial tree
        Vertex x;  // its partial-tree neighbor of minimum depth
        int depth;
    };
    LowestInfo lowest_node(int comp, WorkDepthMeter& meter = null_meter()) const;

    // Unique forest path between x and y (throws across components).
    std::vector<Vertex> find_path_p2p(Vertex x, Vertex y,
                                      WorkDepthMeter& meter = null_meter()) const;

    // Path from x (inside flagged component comp) to a flagged vertex,
    // with no internal flagged vertices.
    std::vector<Vertex> find_path_s2p(int comp, Vertex x,
                                      WorkDepthMeter& meter = null_meter()) const;

    // Test hooks.
    bool check_invariants() const;
    int hierarchy_levels() const { return static_cast<int>(levels_.size()) - 1; }
    void debug_dump(std::ostream& os) const;

private:
    enum class Kind : std::uint8_t { VertexBase, EdgeBase, Round };
    enum class DecType : std::uint8_t { None, Stay, Rake, Compress, Root };
    struct Dec {
        DecType type = DecType::None;
        Vertex a = 0, b = 0;  // rake target / compress neighbors
        friend bool operator==(const Dec&, const Dec&) = default;
    };
    struct Cluster {
        Kind kind;
        Vertex rep = 0;       // vertex id; EdgeBase: smaller endpoint
        Vertex rep2 = 0;      // EdgeBase: larger endpoint
        Vertex bnd[2] = {0, 0};
        int level = 0;
        int parent = -1;
        bool flag = false;
        LowAug aug;
        std::vector<int> children;
    };
    using Entry = std::pair<Vertex, int>;  // (neighbor, edge-cluster id)
    struct Level {
        std::unordered_map<Vertex, std::vector<Entry>> adj;
    };

    int n_;
    std::uint64_t seed_;
    int max_levels_;
    std::vector<Cluster> clusters_;
    std::vector<int> ebase_free_;
    std::vector<bool> alive_;
    std::vector<bool> qflag_;
    std::vector<LowAug> low_;
    std::vector<int> vbase_, vcl_;  // per-vertex base / round cluster ids
    std::vector<int> rlev_;         // removal level; INT_MAX while undecided
    std::vector<Dec> dec_;
    std::vector<std::vector<std::pair<int, int>>> pend_;  // (cluster, level)
    std::vector<Level> levels_;                           // index 1..; [0] unused
    std::unordered_map<std::uint64_t, int> edge_cl_;      // packed endpoints -> EdgeBase id

    // comps ordered flagged-first, then by representative vertex: the key
    // is structural so answers match a fresh build.
    std::set<std::pair<int, Vertex>> comps_;

    static std::uint64_t pack(Vertex u, Vertex v);
    bool coin_head(Vertex v, int level) const;
    int new_edge_base(Vertex u, Vertex v);
    void free_edge_base(int id);
    Level& level(int i);
    bool present(Vertex v, int i) const;
    Dec decide(Vertex v, int i) const;
    std::vector<Entry> derive(Vertex v, int i) const;
    void purge_above(Vertex v, int i, std::vector<std::set<Vertex>>& dirty);
    void run_contraction(std::vector<std::set<Vertex>>& dirty, WorkDepthMeter& meter);
    void rebuild_cluster(Vertex v);
    void refresh_from_base(Vertex v, WorkDepthMeter& meter);
    void comps_erase(Vertex rep);
    void sort_children(Cluster& c);

    std::vector<int> chain_of(Vertex x) const;
    int edge_child_with_boundary(const Cluster& c, Vertex t) const;
    std::vector<Vertex> expand_edge(int ecl, Vertex from, Vertex to,
                                    WorkDepthMeter& meter) const;
    std::vector<Vertex> path_from(Vertex x, const std::vector<int>& chain, int ci,
                                  Vertex t, WorkDepthMeter& meter) const;
    std::vector<Vertex> findpath_into(int cl, Vertex z, WorkDepthMeter& meter) const;
};

}  // namespace pardfs
