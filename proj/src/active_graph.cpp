#include "pardfs/active_graph.hpp"

#include <bit>
#include <stdexcept>

namespace pardfs {

ActiveList::ActiveList(std::vector<int> elements) : n_(static_cast<int>(elements.size())) {
    elem_ = std::move(elements);
    active_.assign(n_, true);
    if (n_ == 0) return;
    leaf_base_ = static_cast<int>(std::bit_ceil(static_cast<unsigned>(n_)));
    count_.assign(2 * leaf_base_, 0);
    for (int i = 0; i < n_; ++i) count_[leaf_base_ + i] = 1;
    for (int v = leaf_base_ - 1; v >= 1; --v) count_[v] = count_[2 * v] + count_[2 * v + 1];
}

void ActiveList::deactivate(int idx, WorkDepthMeter& meter) {
    if (idx < 0 || idx >= n_ || !active_[idx])
        throw std::invalid_argument("ActiveList: slot not active");
    active_[idx] = false;
    std::uint64_t steps = 0;
    for (int v = leaf_base_ + idx; v >= 1; v /= 2) {
        --count_[v];
        ++steps;
    }
    meter.add_work(steps);
}

void ActiveList::collect(int node, int t, std::vector<int>& out) const {
    if (t <= 0 || count_[node] == 0) return;
    if (node >= leaf_base_) {
        out.push_back(elem_[node - leaf_base_]);
        return;
    }
    int tl = std::min(count_[2 * node], t);
    collect(2 * node, tl, out);
    collect(2 * node + 1, t - tl, out);
}

std::vector<int> ActiveList::query(int t, WorkDepthMeter& meter) const {
    std::vector<int> out;
    if (n_ == 0 || t <= 0) return out;
    t = std::min(t, count_[1]);
    out.reserve(t);
    collect(1, t, out);
    meter.add_work(static_cast<std::uint64_t>(t + 1) *
                   std::bit_width(static_cast<unsigned>(n_)));
    return out;
}

bool ActiveList::check_tree_sums() const {
    if (n_ == 0) return true;
    int root_active = 0;
    for (int i = 0; i < n_; ++i) {
        if (count_[leaf_base_ + i] != (active_[i] ? 1 : 0)) return false;
        root_active += active_[i] ? 1 : 0;
    }
    for (int i = n_; i < leaf_base_; ++i)
        if (count_[leaf_base_ + i] != 0) return false;
    for (int v = 1; v < leaf_base_; ++v)
        if (count_[v] != count_[2 * v] + count_[2 * v + 1]) return false;
    return count_[1] == root_active;
}

ActiveGraph::ActiveGraph(const Graph& g, WorkDepthMeter& meter) : g_(&g) {
    const int n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("ActiveGraph: needs at least two vertices");
    active_.assign(n + 1, true);
    lists_.resize(n + 1);
    cross_.assign(g.num_edges(), Cross{-1, -1});
    for (Vertex v = 1; v <= n; ++v) {
        std::vector<int> elems;
        elems.reserve(g.incident(v).size());
        for (EdgeId e : g.incident(v)) {
            int slot = static_cast<int>(elems.size());
            elems.push_back(g.edge_other(e, v));
            if (v == g.edge_u(e))
                cross_[e - 1].slot_in_u = slot;  // slot of the neighbor in u's list
            else
                cross_[e - 1].slot_in_v = slot;
        }
        lists_[v] = ActiveList(std::move(elems));
    }
    meter.add_work(static_cast<std::uint64_t>(n + g.num_edges()));
    meter.add_rounds(1);
}

void ActiveGraph::make_inactive(const std::vector<Vertex>& vertices, WorkDepthMeter& meter) {
    for (Vertex v : vertices) {
        if (!g_->valid_vertex(v) || !active_[v])
            throw std::invalid_argument("make_inactive: vertex not active");
        active_[v] = false;
    }
    for (Vertex v : vertices) {
        for (EdgeId e : g_->incident(v)) {
            Vertex u = g_->edge_other(e, v);
            // v's slot inside u's list
            int slot = (u == g_->edge_u(e)) ? cross_[e - 1].slot_in_u : cross_[e - 1].slot_in_v;
            if (lists_[u].slot_active(slot)) lists_[u].deactivate(slot, meter);
        }
        meter.add_work(1);
    }
    meter.add_rounds(1);
}

std::vector<std::vector<Vertex>> ActiveGraph::query_active(const std::vector<Vertex>& vertices,
                                                           int t, WorkDepthMeter& meter) const {
    if (t < 1) throw std::invalid_argument("query_active: t must be >= 1");
    std::vector<std::vector<Vertex>> out;
    out.reserve(vertices.size());
    for (Vertex v : vertices) out.push_back(lists_[v].query(t, meter));
    meter.add_rounds(1);
    return out;
}

bool ActiveGraph::check_invariants() const {
    for (Vertex v = 1; v <= g_->num_vertices(); ++v) {
        if (!lists_[v].check_tree_sums()) return false;
        int cnt = 0;
        for (Vertex u : g_->neighbors(v))
            if (active_[u]) ++cnt;
        if (lists_[v].active_count() != cnt) return false;
    }
    return true;
}

}  // namespace pardfs
