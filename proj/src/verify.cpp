#include <cstdint>
#include <string>
#include <unordered_set>
#include <vector>

#include "pardfs/components.hpp"
#include "pardfs/dfs.hpp"
#include "pardfs/graph.hpp"

namespace pardfs {

namespace {

void set_diag(std::string* diag, const std::string& msg) {
    if (diag) *diag = msg;
}

std::uint64_t pack(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

std::unordered_set<std::uint64_t> edge_set(const Graph& g) {
    std::unordered_set<std::uint64_t> es;
    es.reserve(g.num_edges() * 2);
    for (EdgeId e = 1; e <= g.num_edges(); ++e) es.insert(pack(g.edge_u(e), g.edge_v(e)));
    return es;
}

}  // namespace

bool verify_dfs_tree(const Graph& g, const std::vector<Vertex>& parent, Vertex r,
                     std::string* diag) {
    const int n = g.num_vertices();
    if (static_cast<int>(parent.size()) != n + 1) {
        set_diag(diag, "parent array has the wrong size");
        return false;
    }
    if (!g.valid_vertex(r) || parent[r] != r) {
        set_diag(diag, "root is not its own parent");
        return false;
    }
    std::unordered_set<std::uint64_t> es = edge_set(g);
    std::vector<std::vector<Vertex>> children(n + 1);
    for (Vertex v = 1; v <= n; ++v) {
        if (v == r) continue;
        if (parent[v] < 1 || parent[v] > n) {
            set_diag(diag, "vertex " + std::to_string(v) + " has no parent");
            return false;
        }
        if (!es.count(pack(v, parent[v]))) {
            set_diag(diag, "tree edge " + std::to_string(parent[v]) + "-" +
                               std::to_string(v) + " is not a graph edge");
            return false;
        }
        children[parent[v]].push_back(v);
    }
    // entry/exit intervals via an explicit walk
    std::vector<int> tin(n + 1, -1), tout(n + 1, -1);
    std::vector<std::pair<Vertex, std::size_t>> stack{{r, 0}};
    int clock = 0;
    tin[r] = clock++;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i == children[v].size()) {
            tout[v] = clock++;
            stack.pop_back();
            continue;
        }
        Vertex c = children[v][i++];
        if (tin[c] != -1) {
            set_diag(diag, "parent pointers contain a cycle through " + std::to_string(c));
            return false;
        }
        tin[c] = clock++;
        stack.emplace_back(c, 0);
    }
    for (Vertex v = 1; v <= n; ++v)
        if (tin[v] == -1) {
            set_diag(diag, "vertex " + std::to_string(v) + " is not reachable from the root");
            return false;
        }
    auto comparable = [&](Vertex a, Vertex b) {
        return (tin[a] <= tin[b] && tout[b] <= tout[a]) ||
               (tin[b] <= tin[a] && tout[a] <= tout[b]);
    };
    for (EdgeId e = 1; e <= g.num_edges(); ++e) {
        Vertex u = g.edge_u(e), v = g.edge_v(e);
        if (!comparable(u, v)) {
            set_diag(diag, "edge " + std::to_string(u) + "-" + std::to_string(v) +
                               " joins incomparable vertices");
            return false;
        }
    }
    set_diag(diag, "");
    return true;
}

bool verify_initial_segment(const Graph& g, const InitialSegment& seg, std::string* diag) {
    const int n = g.num_vertices();
    if (static_cast<int>(seg.parent.size()) != n + 1 ||
        static_cast<int>(seg.depth.size()) != n + 1) {
        set_diag(diag, "segment arrays have the wrong size");
        return false;
    }
    if (!seg.contains(seg.root) || seg.parent[seg.root] != seg.root ||
        seg.depth[seg.root] != 0) {
        set_diag(diag, "segment root is malformed");
        return false;
    }
    std::unordered_set<std::uint64_t> es = edge_set(g);
    for (Vertex v = 1; v <= n; ++v) {
        if (!seg.contains(v)) continue;
        if (v == seg.root) continue;
        Vertex p = seg.parent[v];
        if (!seg.contains(p) || seg.depth[v] != seg.depth[p] + 1 || !es.count(pack(v, p))) {
            set_diag(diag, "segment vertex " + std::to_string(v) + " has a bad parent link");
            return false;
        }
    }
    // every remainder component must see a single root-to-node path
    std::vector<bool> removed(n + 1, false);
    for (Vertex v = 1; v <= n; ++v) removed[v] = seg.contains(v);
    CcLabeling cc = connected_components(g, removed);
    std::vector<std::vector<Vertex>> nbrs(cc.num_components() + 1);
    for (EdgeId e = 1; e <= g.num_edges(); ++e) {
        Vertex u = g.edge_u(e), v = g.edge_v(e);
        if (removed[u] && !removed[v]) nbrs[cc.label[v]].push_back(u);
        if (removed[v] && !removed[u]) nbrs[cc.label[u]].push_back(v);
    }
    std::vector<int> stamp(n + 1, 0);
    for (int c = 1; c <= cc.num_components(); ++c) {
        if (nbrs[c].empty()) continue;
        Vertex deepest = nbrs[c][0];
        for (Vertex v : nbrs[c])
            if (seg.depth[v] > seg.depth[deepest]) deepest = v;
        for (Vertex v = deepest;; v = seg.parent[v]) {
            stamp[v] = c;
            if (v == seg.root) break;
        }
        for (Vertex v : nbrs[c])
            if (stamp[v] != c) {
                set_diag(diag, "component " + std::to_string(c) +
                                   " touches incomparable segment vertices " +
                                   std::to_string(deepest) + " and " + std::to_string(v));
                return false;
            }
    }
    set_diag(diag, "");
    return true;
}

}  // namespace pardfs
