#include "pardfs/path_list.hpp"

#include <stdexcept>

namespace pardfs {

std::vector<std::int64_t> list_rank(const PathList& path,
                                    const std::vector<std::int64_t>& values,
                                    WorkDepthMeter& meter) {
    const int n = path.length();
    if (n == 0) throw std::invalid_argument("list_rank: empty list");
    if (static_cast<int>(values.size()) != n)
        throw std::invalid_argument("list_rank: one value per node required");

    // Pointer jumping on an array copy of the list: each round every node
    // adds the partial sum of its jump target and doubles the jump.
    std::vector<std::int64_t> sum = values;
    std::vector<int> prev(n);
    for (int i = 0; i < n; ++i) prev[i] = i - 1;
    meter.add_work(static_cast<std::uint64_t>(n));
    while (true) {
        bool any = false;
        std::vector<std::int64_t> nsum = sum;
        std::vector<int> nprev = prev;
        for (int i = 0; i < n; ++i) {
            if (prev[i] >= 0) {
                nsum[i] = sum[i] + sum[prev[i]];
                nprev[i] = prev[prev[i]];
                any = true;
            }
        }
        if (!any) break;
        sum.swap(nsum);
        prev.swap(nprev);
        meter.add_work(static_cast<std::uint64_t>(n));
        meter.add_rounds(1);
    }
    return sum;
}

PathPosition locate_on_path(const PathList& path, Vertex v, WorkDepthMeter& meter) {
    const int n = path.length();
    if (n == 0) throw std::invalid_argument("locate_on_path: empty path");
    std::vector<std::int64_t> ones(n, 1);
    auto sums = list_rank(path, ones, meter);
    int idx = 0;
    for (Vertex u : path.nodes) {
        if (u == v) return PathPosition{static_cast<int>(sums[idx]), n};
        ++idx;
    }
    throw std::invalid_argument("locate_on_path: vertex not on path");
}

}  // namespace pardfs
