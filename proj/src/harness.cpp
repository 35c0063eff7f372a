#include "pardfs/harness.hpp"

#include <cmath>
#include <stdexcept>

#include <json.hpp>

#include "pardfs/generators.hpp"

namespace pardfs {

std::string report_json(const RunReport& r) {
    nlohmann::json j;
    j["schema"] = 1;
    j["graph"] = {{"generator", r.generator},
                  {"params", r.params},
                  {"n", r.n},
                  {"m", r.m},
                  {"seed", r.seed}};
    j["root"] = r.root;
    j["mode"] = r.mode;
    j["workers"] = r.workers;
    j["outcome"] = r.outcome;
    j["verified"] = r.verified;
    j["work_units"] = r.work_units;
    j["rounds"] = r.rounds;
    j["wall_ms"] = r.wall_ms;
    j["recursion_depth"] = r.recursion_depth;
    auto stage = [](const WorkDepthMeter& m) {
        return nlohmann::json{{"work_units", m.work_units}, {"rounds", m.rounds}};
    };
    j["stages"] = {{"separator", stage(r.stages.separator)},
                   {"absorb", stage(r.stages.absorb)},
                   {"recursion", stage(r.stages.recursion)}};
    return j.dump(2) + "\n";
}

std::vector<ScalingRow> scaling_suite(const std::vector<int>& sizes, int m_per_n,
                                      std::uint64_t seed) {
    for (std::size_t i = 1; i < sizes.size(); ++i)
        if (sizes[i] < sizes[i - 1])
            throw std::invalid_argument("scaling_suite: sizes must be ascending");
    std::vector<ScalingRow> rows;
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        ScalingRow row;
        row.n = sizes[i];
        row.m = m_per_n * sizes[i];
        Graph g = generate("random-gnm-connected", row.n, row.m, "", seed + i);
        DfsConfig cfg;
        cfg.seed = seed + i;
        DfsResult res = parallel_dfs(g, 1, cfg);
        std::string diag;
        if (!verify_dfs_tree(g, res.parent, 1, &diag))
            throw std::logic_error("scaling_suite: unverified tree: " + diag);
        row.work_units = res.meter.work_units;
        row.rounds = res.meter.rounds;
        double lm = std::log2(static_cast<double>(row.m));
        double ln = std::log2(static_cast<double>(row.n));
        row.work_norm = static_cast<double>(row.work_units) / (row.m * lm * lm * lm);
        row.rounds_norm =
            static_cast<double>(row.rounds) / (std::sqrt(static_cast<double>(row.n)) * ln * ln * ln);
        rows.push_back(row);
    }
    return rows;
}

}  // namespace pardfs
