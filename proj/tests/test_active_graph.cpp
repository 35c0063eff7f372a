#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <set>
#include <vector>

#include "pardfs/active_graph.hpp"

using namespace pardfs;

namespace {

Graph random_graph(int n, int m, std::mt19937_64& rng) {
    std::set<std::pair<Vertex, Vertex>> seen;
    std::vector<std::pair<Vertex, Vertex>> es;
    int guard = 20 * m + 50;
    while (static_cast<int>(es.size()) < m && guard-- > 0) {
        Vertex u = static_cast<Vertex>(1 + rng() % n);
        Vertex v = static_cast<Vertex>(1 + rng() % n);
        if (u == v) continue;
        if (u > v) std::swap(u, v);
        if (!seen.insert({u, v}).second) continue;
        es.emplace_back(u, v);
    }
    return Graph(n, es);
}

}  // namespace

TEST_CASE("active list query is leftmost-first") {
    ActiveList al({10, 20, 30, 40, 50});
    WorkDepthMeter meter;
    CHECK(al.active_count() == 5);
    CHECK(al.query(3, meter) == std::vector<int>{10, 20, 30});
    CHECK(al.query(99, meter) == std::vector<int>{10, 20, 30, 40, 50});
    al.deactivate(1, meter);  // 20 leaves
    al.deactivate(3, meter);  // 40 leaves
    CHECK(al.active_count() == 3);
    CHECK(al.query(2, meter) == std::vector<int>{10, 30});
    CHECK(al.query(3, meter) == std::vector<int>{10, 30, 50});
    CHECK(al.check_tree_sums());
    CHECK_THROWS(al.deactivate(1, meter));  // already inactive
}

TEST_CASE("active list edge shapes") {
    WorkDepthMeter meter;
    ActiveList one({7});
    CHECK(one.active_count() == 1);
    CHECK(one.query(1, meter) == std::vector<int>{7});
    one.deactivate(0, meter);
    CHECK(one.active_count() == 0);
    CHECK(one.query(1, meter).empty());

    ActiveList empty(std::vector<int>{});
    CHECK(empty.active_count() == 0);
    CHECK(empty.query(3, meter).empty());
}

TEST_CASE("active list fuzz against a flat array") {
    std::mt19937_64 rng(99);
    for (int iter = 0; iter < 40; ++iter) {
        int n = 1 + static_cast<int>(rng() % 40);
        std::vector<int> elems(n);
        for (int i = 0; i < n; ++i) elems[i] = static_cast<int>(rng() % 1000);
        ActiveList al(elems);
        std::vector<bool> act(n, true);
        WorkDepthMeter meter;
        for (int step = 0; step < n; ++step) {
            int idx = static_cast<int>(rng() % n);
            if (act[idx]) {
                al.deactivate(idx, meter);
                act[idx] = false;
            }
            int t = 1 + static_cast<int>(rng() % (n + 2));
            std::vector<int> expect;
            for (int i = 0; i < n && static_cast<int>(expect.size()) < t; ++i)
                if (act[i]) expect.push_back(elems[i]);
            CHECK(al.query(t, meter) == expect);
            CHECK(al.check_tree_sums());
        }
    }
}

TEST_CASE("active graph basic flow") {
    Graph g(5, {{1, 2}, {1, 3}, {1, 4}, {2, 3}, {4, 5}});
    WorkDepthMeter meter;
    ActiveGraph ag(g, meter);
    CHECK(ag.active(1));
    CHECK(ag.active_neighbor_count(1) == 3);
    auto res = ag.query_active({1, 4}, 2, meter);
    CHECK(res[0] == std::vector<Vertex>{2, 3});
    CHECK(res[1] == std::vector<Vertex>{1, 5});
    ag.make_inactive({2, 5}, meter);
    CHECK(!ag.active(2));
    CHECK(ag.active_neighbor_count(1) == 2);
    res = ag.query_active({1, 4}, 3, meter);
    CHECK(res[0] == std::vector<Vertex>{3, 4});
    CHECK(res[1] == std::vector<Vertex>{1});
    CHECK(ag.check_invariants());
    CHECK_THROWS(ag.make_inactive({2}, meter));     // already inactive
    CHECK_THROWS(ag.make_inactive({3, 3}, meter));  // duplicate
}

TEST_CASE("active graph requires two vertices") {
    Graph g(1, {});
    CHECK_THROWS(ActiveGraph(g));
}

TEST_CASE("active graph fuzz against a naive oracle") {
    std::mt19937_64 rng(2024);
    for (int iter = 0; iter < 30; ++iter) {
        int n = 2 + static_cast<int>(rng() % 50);
        int m = static_cast<int>(rng() % (3 * n));
        Graph g = random_graph(n, m, rng);
        WorkDepthMeter meter;
        ActiveGraph ag(g, meter);
        std::vector<bool> act(n + 1, true);
        for (int step = 0; step < 12; ++step) {
            // deactivate a random batch of still-active vertices
            std::vector<Vertex> batch;
            for (Vertex v = 1; v <= n; ++v)
                if (act[v] && (rng() % 5) == 0) batch.push_back(v);
            if (!batch.empty()) {
                ag.make_inactive(batch, meter);
                for (Vertex v : batch) act[v] = false;
            }
            int t = 1 + static_cast<int>(rng() % 4);
            std::vector<Vertex> probes;
            for (Vertex v = 1; v <= n; ++v) probes.push_back(v);
            auto got = ag.query_active(probes, t, meter);
            for (Vertex v = 1; v <= n; ++v) {
                std::vector<Vertex> expect;
                for (Vertex w : g.neighbors(v)) {
                    if (act[w]) expect.push_back(w);
                    if (static_cast<int>(expect.size()) == t) break;
                }
                CHECK(got[v - 1] == expect);
                int full = 0;
                for (Vertex w : g.neighbors(v)) full += act[w];
                CHECK(ag.active_neighbor_count(v) == full);
            }
            CHECK(ag.check_invariants());
        }
    }
}
