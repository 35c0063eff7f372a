#include "pardfs/level_forest.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <stdexcept>

namespace pardfs {

LevelForest::LevelForest(const Graph& g, std::uint64_t /*seed*/, WorkDepthMeter& meter)
    : g_(&g) {
    const int n = g.num_vertices();
    const int m = g.num_edges();
    top_level_ = std::max(1, static_cast<int>(std::bit_width(std::max(1u, static_cast<unsigned>(n) - 1))));
    alive_edge_.assign(m + 1, true);
    alive_edge_[0] = false;
    alive_vertex_.assign(n + 1, true);
    alive_vertex_[0] = false;
    alive_vertex_count_ = n;
    is_tree_.assign(m + 1, false);
    doomed_.assign(m + 1, false);
    level_.assign(m + 1, top_level_);
    tree_adj_.assign(n + 1, {});
    nt_buckets_.assign(n + 1, {});
    side_mark_.assign(n + 1, 0);

    // spanning forest by BFS in vertex order
    std::vector<bool> seen(n + 1, false);
    std::deque<Vertex> q;
    for (Vertex s = 1; s <= n; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        q.push_back(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop_front();
            for (EdgeId e : g.incident(v)) {
                Vertex u = g.edge_other(e, v);
                if (!seen[u]) {
                    seen[u] = true;
                    is_tree_[e] = true;
                    tree_adj_[v].push_back(e);
                    tree_adj_[u].push_back(e);
                    q.push_back(u);
                }
            }
        }
    }
    for (EdgeId e = 1; e <= m; ++e)
        if (!is_tree_[e]) push_nt(e);
    meter.add_work(static_cast<std::uint64_t>(n + m));
    meter.add_rounds(std::bit_width(static_cast<unsigned>(n) + 1));
}

void LevelForest::push_nt(EdgeId e) {
    nt_buckets_[g_->edge_u(e)][level_[e]].push_back(e);
    nt_buckets_[g_->edge_v(e)][level_[e]].push_back(e);
}

void LevelForest::compact_tree_adj(Vertex v) {
    auto& a = tree_adj_[v];
    std::erase_if(a, [&](EdgeId e) { return !is_tree_edge(e); });
}

std::vector<Vertex> LevelForest::smaller_side(Vertex u, Vertex v, int lvl,
                                              WorkDepthMeter& meter) const {
    // Lockstep bidirectional BFS over tree edges of level <= lvl. Sides
    // alternately expand one whole vertex, so the side whose frontier
    // empties first has at most half the component's vertices.
    struct Side {
        std::vector<Vertex> vis;
        std::size_t next = 0;  // queue position inside vis
    };
    Side sides[2];
    auto* self = const_cast<LevelForest*>(this);
    ++self->epoch_;
    auto mark = [&](Vertex w, int s) { self->side_mark_[w] = 2 * epoch_ + s; };
    auto marked_any = [&](Vertex w) {
        return side_mark_[w] == 2 * epoch_ || side_mark_[w] == 2 * epoch_ + 1;
    };
    sides[0].vis.push_back(u);
    mark(u, 0);
    sides[1].vis.push_back(v);
    mark(v, 1);
    std::uint64_t steps = 0;
    int done = -1;
    while (done < 0) {
        for (int s = 0; s < 2; ++s) {
            auto& sd = sides[s];
            if (sd.next >= sd.vis.size()) {
                done = s;
                break;
            }
            Vertex w = sd.vis[sd.next++];
            for (EdgeId e : tree_adj_[w]) {
                ++steps;
                if (!is_tree_edge(e) || level_[e] > lvl) continue;
                Vertex x = g_->edge_other(e, w);
                if (!marked_any(x)) {
                    mark(x, s);
                    sd.vis.push_back(x);
                }
            }
        }
    }
    meter.add_work(steps);
    return sides[done].vis;
}

void LevelForest::delete_one_tree_edge(EdgeId e, DeleteResult& res, WorkDepthMeter& meter) {
    Vertex eu = g_->edge_u(e), ev = g_->edge_v(e);
    for (int lvl = level_[e]; lvl <= top_level_; ++lvl) {
        meter.add_rounds(1);
        std::vector<Vertex> side = smaller_side(eu, ev, lvl, meter);
        ++epoch_;
        for (Vertex w : side) side_mark_[w] = 2 * epoch_;
        // demote this side's level-lvl tree edges, keeping the invariant
        for (Vertex w : side) {
            compact_tree_adj(w);
            for (EdgeId f : tree_adj_[w]) {
                if (level_[f] == lvl && side_mark_[g_->edge_other(f, w)] == 2 * epoch_ &&
                    g_->edge_u(f) == w)  // once per edge
                    level_[f] = lvl - 1;
                // edges with one endpoint outside stay: they are above the split
            }
            meter.add_work(tree_adj_[w].size());
        }
        // scan level-lvl non-tree candidates incident to the side
        EdgeId replacement = 0;
        for (Vertex w : side) {
            auto it = nt_buckets_[w].find(lvl);
            if (it == nt_buckets_[w].end()) continue;
            auto& bucket = it->second;
            std::size_t out = 0;
            for (std::size_t in = 0; in < bucket.size(); ++in) {
                EdgeId f = bucket[in];
                meter.add_work(1);
                if (!alive_edge_[f] || doomed_[f] || is_tree_[f] || level_[f] != lvl)
                    continue;  // stale, or scheduled to die later in this batch
                Vertex x = g_->edge_other(f, w);
                if (replacement) {
                    bucket[out++] = f;
                    continue;
                }
                if (side_mark_[x] == 2 * epoch_) {
                    // both endpoints inside: demote
                    level_[f] = lvl - 1;
                    nt_buckets_[g_->edge_u(f)][lvl - 1].push_back(f);
                    nt_buckets_[g_->edge_v(f)][lvl - 1].push_back(f);
                } else {
                    // reconnects the two sides
                    replacement = f;
                    is_tree_[f] = true;
                    tree_adj_[g_->edge_u(f)].push_back(f);
                    tree_adj_[g_->edge_v(f)].push_back(f);
                }
            }
            bucket.resize(out);
            if (bucket.empty()) nt_buckets_[w].erase(lvl);
            if (replacement) break;
        }
        if (replacement) {
            res.replacement_edges.push_back(replacement);
            return;
        }
    }
    // components stay split
}

LevelForest::DeleteResult LevelForest::batch_delete(const std::vector<EdgeId>& edges,
                                                    WorkDepthMeter& meter) {
    DeleteResult res;
    for (std::size_t i = 0; i < edges.size(); ++i) {
        EdgeId e = edges[i];
        if (e < 1 || e > g_->num_edges() || !alive_edge_[e] || doomed_[e]) {
            for (std::size_t j = 0; j < i; ++j) doomed_[edges[j]] = false;
            throw std::invalid_argument("batch_delete: edge not present");
        }
        doomed_[e] = true;
        meter.add_work(1);
    }
    meter.add_rounds(1);
    // One edge at a time so each replacement search still sees the rest of
    // the batch as connecting tree edges; doomed edges are never promoted,
    // which keeps the removed and replacement lists disjoint.
    for (EdgeId e : edges) {
        alive_edge_[e] = false;
        if (is_tree_[e]) {
            is_tree_[e] = false;
            res.removed_tree_edges.push_back(e);
            delete_one_tree_edge(e, res, meter);
        }
        meter.add_work(1);
    }
    for (EdgeId e : edges) doomed_[e] = false;
    return res;
}

LevelForest::DeleteResult LevelForest::batch_delete_vertices(
    const std::vector<Vertex>& vertices, WorkDepthMeter& meter) {
    std::vector<EdgeId> edges;
    for (Vertex v : vertices)
        if (!g_->valid_vertex(v) || !alive_vertex_[v])
            throw std::invalid_argument("batch_delete_vertices: vertex not present");
    ++epoch_;
    for (Vertex v : vertices) side_mark_[v] = 2 * epoch_;
    for (Vertex v : vertices)
        for (EdgeId e : g_->incident(v))
            if (alive_edge_[e]) {
                Vertex o = g_->edge_other(e, v);
                // each edge once even if both endpoints are dying
                if (side_mark_[o] != 2 * epoch_ || v < o) edges.push_back(e);
            }
    DeleteResult res = batch_delete(edges, meter);
    for (Vertex v : vertices) {
        alive_vertex_[v] = false;
        --alive_vertex_count_;
        tree_adj_[v].clear();
        nt_buckets_[v].clear();
    }
    return res;
}

std::vector<EdgeId> LevelForest::tree_edges() const {
    std::vector<EdgeId> out;
    for (EdgeId e = 1; e <= g_->num_edges(); ++e)
        if (is_tree_edge(e)) out.push_back(e);
    return out;
}

CcLabeling LevelForest::forest_components() const {
    const int n = g_->num_vertices();
    CcLabeling cc;
    cc.label.assign(n + 1, 0);
    cc.sizes.assign(1, 0);
    std::vector<Vertex> stack;
    for (Vertex s = 1; s <= n; ++s) {
        if (!alive_vertex_[s] || cc.label[s]) continue;
        int c = static_cast<int>(cc.sizes.size());
        cc.sizes.push_back(0);
        cc.label[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++cc.sizes[c];
            for (EdgeId e : tree_adj_[v]) {
                if (!is_tree_edge(e)) continue;
                Vertex u = g_->edge_other(e, v);
                if (!cc.label[u]) {
                    cc.label[u] = c;
                    stack.push_back(u);
                }
            }
        }
    }
    return cc;
}

bool LevelForest::check_level_invariant() const {
    const int n = g_->num_vertices();
    for (int lvl = 0; lvl <= top_level_; ++lvl) {
        // components over tree edges of level <= lvl
        std::vector<int> comp(n + 1, 0);
        int nc = 0;
        std::vector<Vertex> stack;
        std::vector<int> size_of(1, 0);
        for (Vertex s = 1; s <= n; ++s) {
            if (!alive_vertex_[s] || comp[s]) continue;
            comp[s] = ++nc;
            size_of.push_back(0);
            stack.push_back(s);
            while (!stack.empty()) {
                Vertex v = stack.back();
                stack.pop_back();
                ++size_of[nc];
                for (EdgeId e : tree_adj_[v]) {
                    if (!is_tree_edge(e) || level_[e] > lvl) continue;
                    Vertex u = g_->edge_other(e, v);
                    if (!comp[u]) {
                        comp[u] = nc;
                        stack.push_back(u);
                    }
                }
            }
        }
        for (int c = 1; c <= nc; ++c)
            if (size_of[c] > (1LL << lvl)) return false;
        // non-tree edges of level <= lvl must be internal to one component
        for (EdgeId e = 1; e <= g_->num_edges(); ++e)
            if (alive_edge_[e] && !is_tree_[e] && level_[e] <= lvl &&
                comp[g_->edge_u(e)] != comp[g_->edge_v(e)])
                return false;
    }
    return true;
}

bool LevelForest::check_maximality() const {
    CcLabeling cc = forest_components();
    for (EdgeId e = 1; e <= g_->num_edges(); ++e)
        if (alive_edge_[e] && !is_tree_[e] && cc.label[g_->edge_u(e)] != cc.label[g_->edge_v(e)])
            return false;
    return true;
}

}  // namespace pardfs
