#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pardfs/dfs.hpp"
#include "pardfs/graph.hpp"

namespace pardfs {

// Everything a run reports: the graph descriptor, the outcome, and the
// instrumentation counters. Serialized as versioned JSON (schema 1);
// wall_ms is the only field that varies between identical runs.
struct RunReport {
    std::string generator = "file";
    std::string params;
    int n = 0, m = 0;
    std::uint64_t seed = 0;
    Vertex root = 1;
    std::string mode = "parallel";
    int workers = 1;
    std::string outcome;  // "verified", "verification-failed", or an error text
    bool verified = false;
    std::uint64_t work_units = 0, rounds = 0;
    double wall_ms = 0.0;
    StageMeters stages;
    int recursion_depth = 0;
};

std::string report_json(const RunReport& r);

// One row per size: counters of a parallel_dfs run on a random connected
// graph with m = m_per_n * n edges, plus the counters normalized by the
// target shapes m*log^3(m) for work and sqrt(n)*log^3(n) for rounds.
struct ScalingRow {
    int n = 0, m = 0;
    std::uint64_t work_units = 0, rounds = 0;
    double work_norm = 0.0, rounds_norm = 0.0;
};

std::vector<ScalingRow> scaling_suite(const std::vector<int>& sizes, int m_per_n,
                                      std::uint64_t seed);

}  // namespace pardfs
