#include "pardfs/dfs.hpp"

#include <algorithm>
#include <iterator>
#include <list>
#include <ostream>
#include <stdexcept>

#include "pardfs/components.hpp"
#include "pardfs/rng.hpp"
#include "pardfs/segment_oracle.hpp"
#include "pardfs/separator.hpp"

namespace pardfs {

namespace {

bool adjacent_in(const Graph& g, Vertex u, Vertex v) {
    for (EdgeId e : g.incident(u))
        if (g.edge_other(e, u) == v) return true;
    return false;
}

// If r sits on a separator path, cut it out; the two halves stay in q.
void split_root_off(std::vector<PathList>& q, Vertex r) {
    int next_id = 0;
    for (const PathList& p : q) next_id = std::max(next_id, p.id);
    for (std::size_t i = 0; i < q.size(); ++i) {
        auto it = std::find(q[i].nodes.begin(), q[i].nodes.end(), r);
        if (it == q[i].nodes.end()) continue;
        PathList tail;
        tail.id = ++next_id;
        tail.nodes.splice(tail.nodes.begin(), q[i].nodes, std::next(it), q[i].nodes.end());
        q[i].nodes.erase(it);
        if (!tail.empty()) q.push_back(std::move(tail));
        if (q[i].empty()) {
            q.erase(q.begin() + static_cast<long>(i));
        }
        return;
    }
}

}  // namespace

void attach_path(InitialSegment& seg, const Graph& g, const std::vector<Vertex>& chain,
                 Vertex y, WorkDepthMeter& meter) {
    if (chain.empty()) return;
    if (!seg.contains(y)) throw std::invalid_argument("attach_path: anchor not absorbed");
    if (!adjacent_in(g, chain.front(), y))
        throw std::invalid_argument("attach_path: chain does not touch its anchor");
    PathList pl;
    pl.nodes.assign(chain.begin(), chain.end());
    std::vector<std::int64_t> ranks =
        list_rank(pl, std::vector<std::int64_t>(chain.size(), 1), meter);
    Vertex prev = y;
    for (std::size_t i = 0; i < chain.size(); ++i) {
        Vertex v = chain[i];
        if (seg.contains(v)) throw std::invalid_argument("attach_path: vertex already absorbed");
        if (i > 0 && !adjacent_in(g, prev, v))
            throw std::invalid_argument("attach_path: chain is not a path in g");
        seg.parent[v] = prev;
        seg.depth[v] = seg.depth[y] + static_cast<int>(ranks[i]);
        ++seg.size;
        prev = v;
    }
    meter.add_work(chain.size());
    meter.add_rounds(1);
}

InitialSegment absorb_separator(const Graph& g, std::vector<PathList>& q, Vertex r,
                                std::uint64_t seed, bool verify_each_step,
                                WorkDepthMeter& meter) {
    const int n = g.num_vertices();
    if (!g.valid_vertex(r)) throw std::invalid_argument("absorb_separator: bad root");
    std::vector<bool> qflag(n + 1, false);
    std::vector<int> path_of(n + 1, -1);
    std::vector<std::list<Vertex>::iterator> node_of(n + 1);
    for (std::size_t i = 0; i < q.size(); ++i)
        for (auto it = q[i].nodes.begin(); it != q[i].nodes.end(); ++it) {
            if (*it == r)
                throw std::invalid_argument("absorb_separator: separator touches the root");
            qflag[*it] = true;
            path_of[*it] = static_cast<int>(i);
            node_of[*it] = it;
        }

    InitialSegment seg;
    seg.root = r;
    seg.parent.assign(n + 1, 0);
    seg.depth.assign(n + 1, -1);
    seg.parent[r] = r;
    seg.depth[r] = 0;
    seg.size = 1;

    SegmentOracle so(g, qflag, seed, meter);
    so.absorb({r}, {0}, meter);

    std::uint64_t guard = 0;
    while (auto comp = so.find_cc(meter)) {
        if (++guard > 2ULL * n + 16)
            throw std::logic_error("absorb_separator: loop did not terminate");
        RcTree::LowestInfo info = so.lowest_node(*comp, meter);
        std::vector<Vertex> chain = so.find_path_s2p(*comp, info.v, meter);
        Vertex qv = chain.back();
        PathList& l = q[path_of[qv]];
        PathPosition pos = locate_on_path(l, qv, meter);
        auto it = node_of[qv];
        // absorb the longer half of the separator path behind qv
        if (prefix_is_long_half(pos)) {
            for (auto rit = std::make_reverse_iterator(it); rit != l.nodes.rend(); ++rit)
                chain.push_back(*rit);
            l.nodes.erase(l.nodes.begin(), std::next(it));
        } else {
            for (auto fit = std::next(it); fit != l.nodes.end(); ++fit)
                chain.push_back(*fit);
            l.nodes.erase(it, l.nodes.end());
        }
        for (Vertex v : chain) path_of[v] = -1;

        attach_path(seg, g, chain, info.x, meter);
        std::vector<int> depths;
        depths.reserve(chain.size());
        for (Vertex v : chain) depths.push_back(seg.depth[v]);
        so.absorb(chain, depths, meter);

        if (verify_each_step) {
            std::string diag;
            if (!verify_initial_segment(g, seg, &diag))
                throw std::logic_error("absorb_separator: segment invariant broke: " + diag);
        }
    }
    return seg;
}

std::vector<Vertex> sequential_dfs(const Graph& g, Vertex r) {
    if (!g.valid_vertex(r)) throw std::invalid_argument("sequential_dfs: bad root");
    std::vector<Vertex> parent(g.num_vertices() + 1, 0);
    parent[r] = r;
    std::vector<std::size_t> next(g.num_vertices() + 1, 0);
    std::vector<Vertex> stack{r};
    while (!stack.empty()) {
        Vertex v = stack.back();
        const auto& inc = g.incident(v);
        if (next[v] == inc.size()) {
            stack.pop_back();
            continue;
        }
        Vertex w = g.edge_other(inc[next[v]++], v);
        if (parent[w] == 0 && w != r) {
            parent[w] = v;
            stack.push_back(w);
        }
    }
    return parent;
}

namespace {

struct LevelOutcome {
    std::vector<Vertex> parent;  // over the subgraph's ids
    WorkDepthMeter meter;
    int depth = 1;
};

LevelOutcome solve(const Graph& h, Vertex root, const DfsConfig& cfg, std::uint64_t seed,
                   StageMeters& stages) {
    LevelOutcome out;
    const int n = h.num_vertices();
    if (n <= std::max(cfg.cutoff, cfg.small_guard)) {
        out.parent = sequential_dfs(h, root);
        out.meter.add_work(static_cast<std::uint64_t>(n) + 2ULL * h.num_edges());
        out.meter.add_rounds(n);
        return out;
    }

    WorkDepthMeter msep;
    std::vector<PathList> q = find_separator(h, mix64(seed), msep);
    split_root_off(q, root);
    stages.separator.merge_sequential(msep);
    out.meter.merge_sequential(msep);

    WorkDepthMeter mabs;
    InitialSegment seg = absorb_separator(h, q, root, mix64(seed) + 1, cfg.verify_full, mabs);
    stages.absorb.merge_sequential(mabs);
    out.meter.merge_sequential(mabs);

    std::vector<bool> removed(n + 1, false);
    for (Vertex v = 1; v <= n; ++v) removed[v] = seg.contains(v);
    CcLabeling cc = connected_components(h, removed, out.meter);
    if (cfg.verify_full && 2 * cc.max_component_size() > n)
        throw std::logic_error("parallel_dfs: segment is not a separator");
    std::vector<std::vector<Vertex>> members = component_members(cc);

    out.parent = std::move(seg.parent);
    WorkDepthMeter kids;
    for (int c = 1; c <= cc.num_components(); ++c) {
        const std::vector<Vertex>& mem = members[c - 1];
        // attach below the deepest segment vertex adjacent to the component
        Vertex x = 0;
        int xd = -1;
        for (Vertex v : mem)
            for (EdgeId e : h.incident(v)) {
                Vertex w = h.edge_other(e, v);
                if (!removed[w]) continue;
                if (seg.depth[w] > xd || (seg.depth[w] == xd && w < x)) {
                    xd = seg.depth[w];
                    x = w;
                }
            }
        if (x == 0) throw std::logic_error("parallel_dfs: component without attachment");
        Vertex y = 0;
        for (Vertex v : mem)
            if (adjacent_in(h, v, x) && (y == 0 || v < y)) y = v;

        Subgraph sub = induced_subgraph(h, mem);
        WorkDepthMeter mc;
        LevelOutcome child =
            solve(sub.graph, sub.to_sub[y], cfg, mix64(seed + 0x9e3779b9ULL * (c + 1)),
                  stages);
        mc.merge_sequential(child.meter);
        out.depth = std::max(out.depth, child.depth + 1);
        for (Vertex lv = 1; lv <= sub.graph.num_vertices(); ++lv) {
            Vertex ov = sub.from_sub[lv];
            Vertex op = sub.from_sub[child.parent[lv]];
            out.parent[ov] = ov == sub.from_sub[sub.to_sub[y]] ? x : op;
        }
        out.parent[y] = x;
        // sibling components run concurrently
        kids.work_units += mc.work_units;
        kids.rounds = std::max(kids.rounds, mc.rounds);
        stages.recursion.add_work(mem.size());
    }
    out.meter.merge_sequential(kids);
    out.meter.add_work(static_cast<std::uint64_t>(n) + h.num_edges());
    out.meter.add_rounds(1);
    return out;
}

}  // namespace

DfsResult parallel_dfs(const Graph& g, Vertex r, const DfsConfig& cfg) {
    if (!g.valid_vertex(r)) throw std::invalid_argument("parallel_dfs: bad root");
    WorkDepthMeter mcc;
    CcLabeling cc = connected_components(g, mcc);
    if (cc.num_components() != 1)
        throw std::invalid_argument("parallel_dfs: graph is not connected");

    DfsResult res;
    res.root = r;
    res.meter.merge_sequential(mcc);
    LevelOutcome top = solve(g, r, cfg, mix64(cfg.seed + 0x51ed2701ULL), res.stages);
    res.parent = std::move(top.parent);
    res.meter.merge_sequential(top.meter);
    res.recursion_depth = top.depth;
    return res;
}

void write_parent_array(std::ostream& os, const DfsResult& res) {
    for (Vertex v = 1; v < static_cast<Vertex>(res.parent.size()); ++v)
        os << v << ' ' << res.parent[v] << '\n';
}

void write_dot(std::ostream& os, const Graph& g, const DfsResult& res) {
    os << "graph dfs {\n";
    for (Vertex v = 1; v < static_cast<Vertex>(res.parent.size()); ++v)
        if (res.parent[v] != 0 && res.parent[v] != v)
            os << "  " << res.parent[v] << " -- " << v << " [color=black,penwidth=2];\n";
    for (EdgeId e = 1; e <= g.num_edges(); ++e) {
        Vertex u = g.edge_u(e), v = g.edge_v(e);
        if (res.parent[u] == v || res.parent[v] == u) continue;
        os << "  " << u << " -- " << v << " [color=gray,style=dashed];\n";
    }
    os << "}\n";
}

}  // namespace pardfs
