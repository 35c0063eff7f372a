#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "pardfs/level_forest.hpp"
#include "pardfs/segment_oracle.hpp"

using namespace pardfs;

namespace {

Graph random_connected(int n, int extra, std::mt19937_64& rng) {
    std::vector<std::pair<Vertex, Vertex>> es;
    std::set<std::pair<Vertex, Vertex>> seen;
    for (Vertex v = 2; v <= n; ++v) {
        Vertex u = static_cast<Vertex>(1 + rng() % (v - 1));
        es.emplace_back(u, v);
        seen.insert({std::min(u, v), std::max(u, v)});
    }
    int guard = 20 * extra + 50;
    while (extra > 0 && guard-- > 0) {
        Vertex u = static_cast<Vertex>(1 + rng() % n);
        Vertex v = static_cast<Vertex>(1 + rng() % n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;
        es.emplace_back(u, v);
        --extra;
    }
    return Graph(n, es);
}

// BFS labeling of the graph minus dead edges/vertices
std::vector<int> true_components(const Graph& g, const LevelForest& lf) {
    std::vector<int> lab(g.num_vertices() + 1, 0);
    int next = 0;
    for (Vertex s = 1; s <= g.num_vertices(); ++s) {
        if (!lf.vertex_alive(s) || lab[s]) continue;
        lab[s] = ++next;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (EdgeId e : g.incident(v)) {
                if (!lf.edge_alive(e)) continue;
                Vertex w = g.edge_other(e, v);
                if (!lab[w]) {
                    lab[w] = lab[s];
                    q.push(w);
                }
            }
        }
    }
    return lab;
}

void check_partition_matches(const Graph& g, const LevelForest& lf) {
    CcLabeling fc = lf.forest_components();
    std::vector<int> tc = true_components(g, lf);
    std::vector<int> map_f(fc.num_components() + 1, -1);
    for (Vertex v = 1; v <= g.num_vertices(); ++v) {
        if (!lf.vertex_alive(v)) {
            CHECK(fc.label[v] == 0);
            continue;
        }
        REQUIRE(fc.label[v] > 0);
        if (map_f[fc.label[v]] < 0) map_f[fc.label[v]] = tc[v];
        CHECK(map_f[fc.label[v]] == tc[v]);
    }
    int tn = *std::max_element(tc.begin(), tc.end());
    CHECK(fc.num_components() == tn);
}

}  // namespace

TEST_CASE("initial forest spans every component") {
    std::mt19937_64 rng(5);
    Graph g = random_connected(40, 30, rng);
    WorkDepthMeter meter;
    LevelForest lf(g, 1, meter);
    CHECK(lf.forest_components().num_components() == 1);
    CHECK(static_cast<int>(lf.tree_edges().size()) == 39);
    CHECK(lf.check_level_invariant());
    CHECK(lf.check_maximality());
    check_partition_matches(g, lf);
}

TEST_CASE("edge deletions keep a maximal forest") {
    std::mt19937_64 rng(17);
    for (int iter = 0; iter < 25; ++iter) {
        int n = 3 + static_cast<int>(rng() % 60);
        Graph g = random_connected(n, static_cast<int>(rng() % (2 * n)), rng);
        WorkDepthMeter meter;
        LevelForest lf(g, iter, meter);
        std::vector<EdgeId> order(g.num_edges());
        for (int i = 0; i < g.num_edges(); ++i) order[i] = i + 1;
        std::shuffle(order.begin(), order.end(), rng);
        std::size_t at = 0;
        while (at < order.size()) {
            std::size_t take = std::min<std::size_t>(1 + rng() % 4, order.size() - at);
            std::vector<EdgeId> batch(order.begin() + at, order.begin() + at + take);
            at += take;
            auto res = lf.batch_delete(batch, meter);
            // a removed tree edge never doubles as a replacement
            for (EdgeId e : res.removed_tree_edges)
                CHECK(std::find(res.replacement_edges.begin(), res.replacement_edges.end(),
                                e) == res.replacement_edges.end());
            CHECK(lf.check_level_invariant());
            CHECK(lf.check_maximality());
            check_partition_matches(g, lf);
        }
        CHECK(lf.tree_edges().empty());
    }
}

TEST_CASE("deleting a whole star reconnects the fragments") {
    // hub 1 carries the only tree edges; the rim cycle must take over
    Graph g(5, {{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
    WorkDepthMeter meter;
    LevelForest lf(g, 3, meter);
    auto res = lf.batch_delete_vertices({1}, meter);
    CHECK(!lf.vertex_alive(1));
    CHECK(lf.forest_components().num_components() == 1);
    CHECK(lf.check_maximality());
    check_partition_matches(g, lf);
    for (EdgeId e : res.removed_tree_edges)
        CHECK(std::find(res.replacement_edges.begin(), res.replacement_edges.end(), e) ==
              res.replacement_edges.end());
}

TEST_CASE("vertex deletions match the rebuild oracle") {
    std::mt19937_64 rng(271828);
    for (int iter = 0; iter < 20; ++iter) {
        int n = 4 + static_cast<int>(rng() % 80);
        Graph g = random_connected(n, static_cast<int>(rng() % (3 * n)), rng);
        WorkDepthMeter meter;
        LevelForest lf(g, iter, meter);
        std::vector<Vertex> alive;
        for (Vertex v = 1; v <= n; ++v) alive.push_back(v);
        while (alive.size() > 1) {
            std::shuffle(alive.begin(), alive.end(), rng);
            std::size_t take = std::min<std::size_t>(1 + rng() % 3, alive.size() - 1);
            std::vector<Vertex> batch(alive.begin(), alive.begin() + take);
            alive.erase(alive.begin(), alive.begin() + take);
            lf.batch_delete_vertices(batch, meter);
            CHECK(lf.check_level_invariant());
            CHECK(lf.check_maximality());
            check_partition_matches(g, lf);
        }
    }
}

TEST_CASE("deletion errors") {
    Graph g(3, {{1, 2}, {2, 3}});
    WorkDepthMeter meter;
    LevelForest lf(g, 0, meter);
    CHECK_THROWS(lf.batch_delete({0}, meter));
    CHECK_THROWS(lf.batch_delete({1, 1}, meter));  // duplicate in one batch
    lf.batch_delete({1}, meter);
    CHECK_THROWS(lf.batch_delete({1}, meter));  // already dead
    lf.batch_delete_vertices({1}, meter);
    CHECK_THROWS(lf.batch_delete_vertices({1}, meter));
}

TEST_CASE("segment oracle tracks components flags and lows") {
    std::mt19937_64 rng(424242);
    for (int iter = 0; iter < 15; ++iter) {
        int n = 5 + static_cast<int>(rng() % 60);
        Graph g = random_connected(n, static_cast<int>(rng() % (2 * n)), rng);
        std::vector<bool> qflag(n + 1, false);
        for (Vertex v = 2; v <= n; ++v) qflag[v] = (rng() % 3) == 0;
        WorkDepthMeter meter;
        SegmentOracle so(g, qflag, iter, meter);
        CHECK(so.check_invariants());

        std::vector<char> absorbed(n + 1, 0);
        std::vector<int> depth(n + 1, -1);
        // absorb random frontier batches, mimicking segment growth
        so.absorb({1}, {0}, meter);
        absorbed[1] = 1;
        depth[1] = 0;
        for (int step = 0; step < 8 && so.remainder_size() > 0; ++step) {
            std::vector<Vertex> batch;
            std::vector<int> depths;
            for (Vertex v = 1; v <= n; ++v) {
                if (absorbed[v]) continue;
                bool frontier = false;
                int best = -1;
                for (EdgeId e : g.incident(v)) {
                    Vertex w = g.edge_other(e, v);
                    if (absorbed[w]) {
                        frontier = true;
                        best = std::max(best, depth[w]);
                    }
                }
                if (frontier && (rng() % 2) == 0) {
                    batch.push_back(v);
                    depths.push_back(best + 1);
                }
            }
            if (batch.empty()) continue;
            so.absorb(batch, depths, meter);
            for (std::size_t i = 0; i < batch.size(); ++i) {
                absorbed[batch[i]] = 1;
                depth[batch[i]] = depths[i];
            }
            CHECK(so.check_invariants());

            // per-vertex lows match the deepest absorbed neighbor
            for (Vertex v = 1; v <= n; ++v) {
                if (absorbed[v]) continue;
                LowAug expect;
                for (EdgeId e : g.incident(v)) {
                    Vertex w = g.edge_other(e, v);
                    if (absorbed[w]) expect = std::min(expect, LowAug{depth[w], w, v});
                }
                CHECK(so.rc().vertex_low(v) == expect);
            }

            // find_cc points at a component holding a flagged vertex, and its
            // reported lowest attachment matches brute force over that component
            if (auto comp = so.find_cc(meter)) {
                RcTree::LowestInfo info = so.lowest_node(*comp, meter);
                CHECK(!absorbed[info.v]);
                CHECK(absorbed[info.x]);
                CHECK(depth[info.x] == info.depth);
                int best = -1;
                bool holds_flag = false;
                for (Vertex v = 1; v <= n; ++v) {
                    if (absorbed[v] || so.component_of(v) != *comp) continue;
                    if (qflag[v]) holds_flag = true;
                    best = std::max(best, so.rc().vertex_low(v).none()
                                              ? -1
                                              : so.rc().vertex_low(v).d);
                }
                CHECK(holds_flag);
                CHECK(info.depth == best);

                // the walk to a flagged vertex has an unflagged interior
                auto chain = so.find_path_s2p(*comp, info.v, meter);
                REQUIRE(!chain.empty());
                CHECK(chain.front() == info.v);
                CHECK(qflag[chain.back()]);
                for (std::size_t i = 0; i + 1 < chain.size(); ++i) CHECK(!qflag[chain[i]]);
                for (Vertex v : chain) CHECK(!absorbed[v]);
            }
        }
    }
}
