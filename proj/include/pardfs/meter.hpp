#pragma once

#include <algorithm>
#include <cstdint>

namespace pardfs {

// Instrumentation for the batch-parallel execution contract. work_units
// counts elementary operations, rounds counts batch phases (the stand-in
// for depth: a batch that a parallel machine would run in one phase adds
// one round regardless of its size).
struct WorkDepthMeter {
    std::uint64_t work_units = 0;
    std::uint64_t rounds = 0;

    void add_work(std::uint64_t w) { work_units += w; }
    void add_rounds(std::uint64_t r) { rounds += r; }

    // Parallel composition: sibling branches run concurrently, so their
    // work adds up while only the longest branch contributes rounds.
    void merge_parallel(const WorkDepthMeter& a, const WorkDepthMeter& b) {
        work_units += a.work_units + b.work_units;
        rounds += std::max(a.rounds, b.rounds);
    }

    void merge_sequential(const WorkDepthMeter& o) {
        work_units += o.work_units;
        rounds += o.rounds;
    }
};

// Shared scratch meter for callers that do not care about instrumentation.
inline WorkDepthMeter& null_meter() {
    thread_local WorkDepthMeter m;
    return m;
}

}  // namespace pardfs
