#include "pardfs/components.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace pardfs {

int CcLabeling::max_component_size() const {
    int best = 0;
    for (std::size_t c = 1; c < sizes.size(); ++c) best = std::max(best, sizes[c]);
    return best;
}

CcLabeling connected_components(const Graph& g, const std::vector<bool>& removed,
                                WorkDepthMeter& meter) {
    const int n = g.num_vertices();
    if (static_cast<int>(removed.size()) != n + 1)
        throw std::invalid_argument("connected_components: removed mask size mismatch");
    CcLabeling cc;
    cc.label.assign(n + 1, 0);
    cc.sizes.assign(1, 0);
    std::vector<Vertex> stack;
    std::uint64_t touched = 0;
    for (Vertex s = 1; s <= n; ++s) {
        if (removed[s] || cc.label[s]) continue;
        int c = static_cast<int>(cc.sizes.size());
        cc.sizes.push_back(0);
        cc.label[s] = c;
        stack.push_back(s);
        while (!stack.empty()) {
            Vertex v = stack.back();
            stack.pop_back();
            ++cc.sizes[c];
            touched += 1 + g.degree(v);
            for (EdgeId e : g.incident(v)) {
                Vertex u = g.edge_other(e, v);
                if (!removed[u] && !cc.label[u]) {
                    cc.label[u] = c;
                    stack.push_back(u);
                }
            }
        }
    }
    meter.add_work(touched + static_cast<std::uint64_t>(n));
    // Parallel connectivity runs in logarithmically many hook/contract
    // phases; charge rounds accordingly.
    meter.add_rounds(std::bit_width(static_cast<unsigned>(n) + 1));
    return cc;
}

CcLabeling connected_components(const Graph& g, WorkDepthMeter& meter) {
    return connected_components(g, std::vector<bool>(g.num_vertices() + 1, false), meter);
}

std::vector<std::vector<Vertex>> component_members(const CcLabeling& cc) {
    std::vector<std::vector<Vertex>> out(cc.sizes.size());
    for (Vertex v = 1; v < static_cast<Vertex>(cc.label.size()); ++v)
        if (cc.label[v]) out[cc.label[v]].push_back(v);
    out.erase(out.begin());
    return out;
}

}  // namespace pardfs
