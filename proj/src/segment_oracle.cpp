#include "pardfs/segment_oracle.hpp"

#include <stdexcept>
#include <unordered_map>

namespace pardfs {

SegmentOracle::SegmentOracle(const Graph& g, const std::vector<bool>& qflag,
                             std::uint64_t seed, WorkDepthMeter& meter)
    : g_(&g), lf_(g, seed, meter), rc_(g.num_vertices(), seed * 0x9e3779b97f4a7c15ULL + 1) {
    if (static_cast<int>(qflag.size()) != g.num_vertices() + 1)
        throw std::invalid_argument("segment oracle: qflag size mismatch");
    std::vector<std::pair<Vertex, Vertex>> forest;
    for (EdgeId e : lf_.tree_edges()) forest.emplace_back(g.edge_u(e), g.edge_v(e));
    rc_.build(forest, qflag, std::vector<LowAug>(g.num_vertices() + 1), meter);
}

void SegmentOracle::absorb(const std::vector<Vertex>& vertices,
                           const std::vector<int>& depths, WorkDepthMeter& meter) {
    if (vertices.size() != depths.size())
        throw std::invalid_argument("absorb: vertices/depths size mismatch");
    std::vector<char> leaving(g_->num_vertices() + 1, 0);
    for (Vertex v : vertices) {
        if (!g_->valid_vertex(v) || !lf_.vertex_alive(v))
            throw std::invalid_argument("absorb: vertex not in the remainder");
        leaving[v] = 1;
    }
    // Surviving neighbors learn the depth of their new segment neighbors;
    // candidates are gathered before the edges disappear.
    std::vector<std::pair<Vertex, LowAug>> cand;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        Vertex u = vertices[i];
        for (EdgeId e : g_->incident(u)) {
            if (!lf_.edge_alive(e)) continue;
            Vertex w = g_->edge_other(e, u);
            if (!leaving[w]) cand.emplace_back(w, LowAug{depths[i], u, w});
        }
        meter.add_work(g_->incident(u).size());
    }
    meter.add_rounds(1);

    LevelForest::DeleteResult res = lf_.batch_delete_vertices(vertices, meter);
    auto endpoints = [&](const std::vector<EdgeId>& es) {
        std::vector<std::pair<Vertex, Vertex>> out;
        out.reserve(es.size());
        for (EdgeId e : es) out.emplace_back(g_->edge_u(e), g_->edge_v(e));
        return out;
    };
    rc_.batch_update(endpoints(res.removed_tree_edges), endpoints(res.replacement_edges),
                     meter);
    rc_.remove_isolated(vertices, meter);
    for (const auto& [w, aug] : cand)
        if (aug < rc_.vertex_low(w)) rc_.set_vertex_low(w, aug, meter);
    meter.add_work(cand.size());
    meter.add_rounds(1);
}

bool SegmentOracle::check_invariants() const {
    CcLabeling cc = lf_.forest_components();
    // the mirror partitions the remainder exactly like the forest
    std::unordered_map<int, int> label_of_comp;
    for (Vertex v = 1; v <= g_->num_vertices(); ++v) {
        if (!lf_.vertex_alive(v)) continue;
        if (!rc_.vertex_alive(v)) return false;
        int comp = rc_.component_of(v);
        auto [it, fresh] = label_of_comp.try_emplace(comp, cc.label[v]);
        if (!fresh && it->second != cc.label[v]) return false;
    }
    if (label_of_comp.size() != static_cast<std::size_t>(cc.num_components())) return false;
    // a component is marked iff one of its vertices is marked
    std::vector<char> has_flag(cc.num_components() + 1, 0);
    for (Vertex v = 1; v <= g_->num_vertices(); ++v)
        if (lf_.vertex_alive(v) && rc_.vertex_flag(v)) has_flag[cc.label[v]] = 1;
    for (Vertex v = 1; v <= g_->num_vertices(); ++v) {
        if (!lf_.vertex_alive(v)) continue;
        if (rc_.component_flag(rc_.component_of(v)) != (has_flag[cc.label[v]] != 0))
            return false;
    }
    return rc_.check_invariants();
}

}  // namespace pardfs
