#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <queue>
#include <random>
#include <set>
#include <vector>

#include "pardfs/generators.hpp"
#include "pardfs/separator.hpp"

using namespace pardfs;

namespace {

bool is_path_in(const Graph& g, const PathList& p) {
    std::set<Vertex> seen;
    Vertex prev = 0;
    for (Vertex v : p.nodes) {
        if (!g.valid_vertex(v) || !seen.insert(v).second) return false;
        if (prev != 0) {
            bool adj = false;
            for (EdgeId e : g.incident(prev))
                if (g.edge_other(e, prev) == v) adj = true;
            if (!adj) return false;
        }
        prev = v;
    }
    return !p.empty();
}

bool pairwise_disjoint(const std::vector<PathList>& q) {
    std::set<Vertex> seen;
    for (const PathList& p : q)
        for (Vertex v : p.nodes)
            if (!seen.insert(v).second) return false;
    return true;
}

// Random vertex-disjoint paths carved by non-revisiting walks.
std::vector<PathList> carve_paths(const Graph& g, int want, int max_len,
                                  std::mt19937_64& rng) {
    std::vector<char> used(g.num_vertices() + 1, 0);
    std::vector<PathList> out;
    int id = 0;
    for (int tries = 0; tries < 4 * want && static_cast<int>(out.size()) < want; ++tries) {
        Vertex v = static_cast<Vertex>(1 + rng() % g.num_vertices());
        if (used[v]) continue;
        PathList p;
        p.id = ++id;
        p.nodes.push_back(v);
        used[v] = 1;
        int len = 1 + static_cast<int>(rng() % max_len);
        while (p.length() < len) {
            std::vector<Vertex> opts;
            for (Vertex w : g.neighbors(p.nodes.back()))
                if (!used[w]) opts.push_back(w);
            if (opts.empty()) break;
            Vertex w = opts[rng() % opts.size()];
            p.nodes.push_back(w);
            used[w] = 1;
        }
        out.push_back(std::move(p));
    }
    return out;
}

}  // namespace

TEST_CASE("trivial separator covers every vertex") {
    Graph g = generate("cycle", 9, 0, "", 0);
    auto q = build_trivial_separator(g);
    CHECK(q.size() == 9);
    for (const PathList& p : q) CHECK(p.length() == 1);
    CHECK(is_separator(g, q));
}

TEST_CASE("is_separator on a path graph") {
    Graph g = generate("path", 9, 0, "", 0);
    CHECK(is_separator(g, {PathList(1, {5})}));   // halves of size 4
    CHECK(!is_separator(g, {PathList(1, {3})}));  // leaves 6 > 9/2
    CHECK(is_separator(g, {PathList(1, {3, 4, 5, 6, 7})}));
    CHECK_THROWS(is_separator(g, {PathList(1, {3}), PathList(2, {3})}));
}

TEST_CASE("match_heads pairs heads with distinct available vertices") {
    std::mt19937_64 rng(88);
    for (int iter = 0; iter < 50; ++iter) {
        int n = 4 + static_cast<int>(rng() % 36);
        Graph g = generate("random-gnm-connected", n,
                           n - 1 + static_cast<int>(rng() % n), "", iter * 31 + 1);
        WorkDepthMeter meter;
        ActiveGraph ag(g, meter);
        // heads are a random subset, made inactive just as merge_paths does
        std::vector<Vertex> heads;
        for (Vertex v = 1; v <= n; ++v)
            if (rng() % 3 == 0) heads.push_back(v);
        if (heads.empty()) heads.push_back(1);
        ag.make_inactive(heads, meter);

        auto match = match_heads(g, ag, heads, iter, meter);
        REQUIRE(match.size() == heads.size());
        std::set<Vertex> partners;
        for (std::size_t j = 0; j < heads.size(); ++j) {
            if (match[j] == 0) {
                // a failed head must be out of available neighbors
                CHECK(ag.active_neighbor_count(heads[j]) == 0);
                continue;
            }
            CHECK(partners.insert(match[j]).second);  // distinct partners
            CHECK(!ag.active(match[j]));              // claimed
            bool adj = false;
            for (Vertex w : g.neighbors(heads[j]))
                if (w == match[j]) adj = true;
            CHECK(adj);
        }
    }
}

TEST_CASE("merge_paths joins an adjacent short path directly") {
    Graph g(2, {{1, 2}});
    std::vector<PathList> longs{PathList(1, {1})};
    std::vector<PathList> shorts{PathList(2, {2})};
    MergeOptions opts;
    opts.termination_threshold = 0;
    opts.enforce_precondition = false;
    MergeResult mr = merge_paths(g, longs, shorts, 1, opts);
    REQUIRE(mr.outcome.size() == 1);
    CHECK(mr.outcome[0].fate == MergeResult::Fate::Matched);
    CHECK(mr.outcome[0].ext.empty());
    CHECK(mr.outcome[0].short_index == 0);
    CHECK(mr.outcome[0].y == 2);

    JoinResult jr = apply_joins(longs, shorts, mr);
    REQUIRE(jr.longs.size() == 1);
    CHECK(std::vector<Vertex>(jr.longs[0].nodes.begin(), jr.longs[0].nodes.end()) ==
          std::vector<Vertex>{1, 2});
    CHECK(jr.shorts.empty());
    CHECK(jr.shorts_removed == 1);
}

TEST_CASE("merge and join keep paths disjoint and conserve vertices") {
    std::mt19937_64 rng(5150);
    for (int iter = 0; iter < 60; ++iter) {
        int n = 6 + static_cast<int>(rng() % 35);
        Graph g = generate("random-gnm-connected", n,
                           n - 1 + static_cast<int>(rng() % (2 * n)), "", iter * 7 + 3);
        auto paths = carve_paths(g, 2 + static_cast<int>(rng() % 6), 4, rng);
        if (paths.size() < 2) continue;
        std::vector<PathList> longs, shorts;
        for (std::size_t i = 0; i < paths.size(); ++i)
            (i < paths.size() / 2 ? longs : shorts).push_back(paths[i]);
        if (longs.empty() || shorts.empty()) continue;

        std::set<Vertex> before;
        for (const auto& p : longs)
            for (Vertex v : p.nodes) before.insert(v);
        for (const auto& p : shorts)
            for (Vertex v : p.nodes) before.insert(v);

        MergeOptions opts;
        opts.termination_threshold = 0;
        opts.enforce_precondition = false;
        MergeResult mr = merge_paths(g, longs, shorts, iter, opts);
        JoinResult jr = apply_joins(longs, shorts, mr);

        std::vector<PathList> all = jr.longs;
        all.insert(all.end(), jr.shorts.begin(), jr.shorts.end());
        CHECK(pairwise_disjoint(all));
        for (const PathList& p : all) CHECK(is_path_in(g, p));

        // every vertex of the old separator survives in a path or a tail
        std::set<Vertex> after;
        for (const PathList& p : all)
            for (Vertex v : p.nodes) after.insert(v);
        for (const auto& tail : jr.discarded)
            for (Vertex v : tail) after.insert(v);
        for (Vertex v : before) CHECK(after.count(v) == 1);
    }
}

TEST_CASE("reduce_paths rejects separators that are already small") {
    Graph g = generate("path", 30, 0, "", 0);
    auto q = build_trivial_separator(g);  // 30 <= 48*floor(sqrt(30))
    CHECK_THROWS(reduce_paths(g, q, 1));
}

TEST_CASE("find_separator meets the path budget") {
    for (std::uint64_t seed = 1; seed <= 3; ++seed) {
        int n = 3000 + static_cast<int>(700 * seed);
        Graph g = generate("random-gnm-connected", n, 3 * n, "", seed);
        WorkDepthMeter meter;
        auto q = find_separator(g, seed, meter);
        int limit = 48 * static_cast<int>(std::sqrt(static_cast<double>(n)));
        CHECK(static_cast<int>(q.size()) <= limit);
        CHECK(pairwise_disjoint(q));
        for (const PathList& p : q) CHECK(is_path_in(g, p));
        CHECK(is_separator(g, q));
        CHECK(meter.work_units > 0);
        CHECK(meter.rounds > 0);
    }
}

TEST_CASE("find_separator rejects disconnected graphs") {
    Graph g(4, {{1, 2}, {3, 4}});
    CHECK_THROWS(find_separator(g, 0));
}
