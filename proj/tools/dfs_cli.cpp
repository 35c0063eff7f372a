#include <chrono>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "pardfs/components.hpp"
#include "pardfs/dfs.hpp"
#include "pardfs/generators.hpp"
#include "pardfs/graph.hpp"
#include "pardfs/harness.hpp"

using namespace pardfs;

namespace {

// Runs the chosen mode per connected component (the root names the first
// one; every other component is rooted at its smallest vertex) and stitches
// the parent arrays into one forest.
struct ForestRun {
    std::vector<Vertex> parent;
    bool verified = true;
    WorkDepthMeter meter;
    StageMeters stages;
    int recursion_depth = 0;
    std::string diag;
};

ForestRun run_forest(const Graph& g, Vertex root, const std::string& mode,
                     const DfsConfig& cfg) {
    ForestRun out;
    out.parent.assign(g.num_vertices() + 1, 0);
    CcLabeling cc = connected_components(g);
    std::vector<std::vector<Vertex>> members = component_members(cc);
    for (int c = 1; c <= cc.num_components(); ++c) {
        const std::vector<Vertex>& mem = members[c - 1];
        Subgraph sub = induced_subgraph(g, mem);
        Vertex r = cc.label[root] == c ? sub.to_sub[root] : 1;
        std::vector<Vertex> local;
        if (mode == "sequential") {
            local = sequential_dfs(sub.graph, r);
            out.meter.add_work(mem.size());
            out.meter.add_rounds(mem.size());
        } else {
            DfsResult res = parallel_dfs(sub.graph, r, cfg);
            local = std::move(res.parent);
            out.meter.merge_sequential(res.meter);
            out.stages.separator.merge_sequential(res.stages.separator);
            out.stages.absorb.merge_sequential(res.stages.absorb);
            out.stages.recursion.merge_sequential(res.stages.recursion);
            out.recursion_depth = std::max(out.recursion_depth, res.recursion_depth);
        }
        std::string diag;
        if (!verify_dfs_tree(sub.graph, local, r, &diag)) {
            out.verified = false;
            out.diag = diag;
        }
        for (Vertex lv = 1; lv <= sub.graph.num_vertices(); ++lv)
            out.parent[sub.from_sub[lv]] = sub.from_sub[local[lv]];
    }
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"parallel DFS driver"};
    std::string gen, input, params, mode = "parallel", verify = "fast";
    std::string report_path, dot_path;
    int n = 0, m = 0, cutoff = 256, workers = 1;
    Vertex root = 1;
    std::uint64_t seed = 0;

    app.add_option("--gen", gen, "graph generator kind");
    app.add_option("--input", input, "graph file (n m header, one edge per line)");
    app.add_option("--n", n, "vertex count for --gen");
    app.add_option("--m", m, "edge count for --gen");
    app.add_option("--params", params, "extra generator parameters, e.g. 3x4");
    app.add_option("--root", root, "DFS root")->default_val(1);
    app.add_option("--seed", seed, "run seed")->default_val(0);
    app.add_option("--mode", mode, "parallel or sequential")
        ->check(CLI::IsMember({"parallel", "sequential"}));
    app.add_option("--cutoff", cutoff, "sequential base-case size");
    app.add_option("--verify", verify, "fast or full (checks every absorb step)")
        ->check(CLI::IsMember({"fast", "full"}));
    app.add_option("--workers", workers, "worker-count hint (results are seed-determined)");
    app.add_option("--report", report_path, "write a JSON run report here");
    app.add_option("--export-dot", dot_path, "write the tree as Graphviz DOT here");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    RunReport rep;
    rep.mode = mode;
    rep.workers = workers;
    rep.seed = seed;
    rep.root = root;
    try {
        if (gen.empty() == input.empty())
            throw std::invalid_argument("exactly one of --gen and --input is required");
        Graph g = input.empty() ? generate(gen, n, m, params, seed) : load_graph_file(input);
        rep.generator = input.empty() ? gen : "file";
        rep.params = params;
        rep.n = g.num_vertices();
        rep.m = g.num_edges();
        if (!g.valid_vertex(root)) throw std::invalid_argument("root is out of range");

        DfsConfig cfg;
        cfg.cutoff = cutoff;
        cfg.seed = seed;
        cfg.workers = workers;
        cfg.verify_full = verify == "full";

        auto t0 = std::chrono::steady_clock::now();
        ForestRun run = run_forest(g, root, mode, cfg);
        rep.wall_ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                .count();
        rep.verified = run.verified;
        rep.outcome = run.verified ? "verified" : "verification-failed: " + run.diag;
        rep.work_units = run.meter.work_units;
        rep.rounds = run.meter.rounds;
        rep.stages = run.stages;
        rep.recursion_depth = run.recursion_depth;

        if (!dot_path.empty()) {
            DfsResult res;
            res.root = root;
            res.parent = run.parent;
            std::ofstream out(dot_path);
            write_dot(out, g, res);
        }
        if (!report_path.empty()) std::ofstream(report_path) << report_json(rep);
        std::cout << report_json(rep);
        return run.verified ? 0 : 1;
    } catch (const std::exception& e) {
        rep.outcome = std::string("error: ") + e.what();
        if (!report_path.empty()) std::ofstream(report_path) << report_json(rep);
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
