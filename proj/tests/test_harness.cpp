#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <queue>
#include <sstream>

#include <json.hpp>

#include "pardfs/generators.hpp"
#include "pardfs/harness.hpp"

using namespace pardfs;

namespace {

bool connected(const Graph& g) {
    if (g.num_vertices() == 0) return false;
    std::vector<char> seen(g.num_vertices() + 1, 0);
    std::queue<Vertex> q;
    q.push(1);
    seen[1] = 1;
    int cnt = 1;
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (EdgeId e : g.incident(v)) {
            Vertex w = g.edge_other(e, v);
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push(w);
            }
        }
    }
    return cnt == g.num_vertices();
}

}  // namespace

TEST_CASE("generator families have the promised shape") {
    CHECK(generate("path", 7, 0, "", 0).num_edges() == 6);
    CHECK(generate("cycle", 7, 0, "", 0).num_edges() == 7);
    CHECK(generate("star", 7, 0, "", 0).degree(1) == 6);
    CHECK(generate("complete", 6, 0, "", 0).num_edges() == 15);

    Graph grid = generate("grid", 0, 0, "3x4", 0);
    CHECK(grid.num_vertices() == 12);
    CHECK(grid.num_edges() == 17);  // 3*3 + 2*4
    CHECK(connected(grid));

    Graph lolli = generate("lollipop", 10, 0, "", 0);
    CHECK(lolli.num_vertices() == 10);
    CHECK(connected(lolli));

    Graph tree = generate("random-tree", 40, 0, "", 3);
    CHECK(tree.num_edges() == 39);
    CHECK(connected(tree));

    Graph gnm = generate("random-gnm-connected", 50, 120, "", 4);
    CHECK(gnm.num_vertices() == 50);
    CHECK(gnm.num_edges() == 120);
    CHECK(connected(gnm));
}

TEST_CASE("generators are deterministic per seed") {
    Graph a = generate("random-gnm-connected", 30, 60, "", 9);
    Graph b = generate("random-gnm-connected", 30, 60, "", 9);
    REQUIRE(a.num_edges() == b.num_edges());
    for (EdgeId e = 1; e <= a.num_edges(); ++e) {
        CHECK(a.edge_u(e) == b.edge_u(e));
        CHECK(a.edge_v(e) == b.edge_v(e));
    }
}

TEST_CASE("generator errors") {
    CHECK_THROWS(generate("no-such-kind", 5, 0, "", 0));
    CHECK_THROWS(generate("cycle", 2, 0, "", 0));
    CHECK_THROWS(generate("random-gnm-connected", 10, 5, "", 0));   // m < n-1
    CHECK_THROWS(generate("random-gnm-connected", 4, 99, "", 0));   // m too large
    CHECK_THROWS(generate("grid", 0, 0, "3by4", 0));
}

TEST_CASE("run reports serialize as schema-1 json") {
    RunReport rep;
    rep.generator = "cycle";
    rep.n = 12;
    rep.m = 12;
    rep.seed = 3;
    rep.root = 2;
    rep.outcome = "verified";
    rep.verified = true;
    rep.work_units = 100;
    rep.rounds = 7;
    rep.stages.separator.add_work(40);
    rep.recursion_depth = 2;
    nlohmann::json j = nlohmann::json::parse(report_json(rep));
    CHECK(j["schema"] == 1);
    CHECK(j["graph"]["generator"] == "cycle");
    CHECK(j["graph"]["n"] == 12);
    CHECK(j["graph"]["seed"] == 3);
    CHECK(j["root"] == 2);
    CHECK(j["outcome"] == "verified");
    CHECK(j["verified"] == true);
    CHECK(j["work_units"] == 100);
    CHECK(j["rounds"] == 7);
    CHECK(j["stages"]["separator"]["work_units"] == 40);
    CHECK(j["recursion_depth"] == 2);
}

TEST_CASE("scaling_suite fills normalized counters") {
    auto rows = scaling_suite({256, 512}, 3, 11);
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].n == 256);
    CHECK(rows[0].m == 768);
    CHECK(rows[1].n == 512);
    for (const auto& r : rows) {
        CHECK(r.work_units > 0);
        CHECK(r.rounds > 0);
        CHECK(r.work_norm > 0.0);
        CHECK(r.rounds_norm > 0.0);
    }
    CHECK_THROWS(scaling_suite({512, 256}, 3, 11));
}

TEST_CASE("tree exports") {
    Graph g = generate("cycle", 5, 0, "", 0);
    DfsResult res = parallel_dfs(g, 1);
    std::ostringstream pa;
    write_parent_array(pa, res);
    CHECK(pa.str().find("1 1\n") == 0);
    std::ostringstream dot;
    write_dot(dot, g, res);
    CHECK(dot.str().rfind("graph dfs {", 0) == 0);
    CHECK(dot.str().find("--") != std::string::npos);
    CHECK(dot.str().find("dashed") != std::string::npos);  // the one non-tree edge
}
