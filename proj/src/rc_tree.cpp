#include "pardfs/rc_tree.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <ostream>
#include <climits>
#include <stdexcept>
#include <tuple>

#include "pardfs/rng.hpp"

namespace pardfs {

namespace {
constexpr int kUndecided = INT_MAX;
}

RcTree::RcTree(int n, std::uint64_t seed) : n_(n), seed_(seed) {
    if (n < 1) throw std::invalid_argument("RcTree: n must be positive");
    max_levels_ = 60 + 20 * static_cast<int>(std::bit_width(static_cast<unsigned>(n)));
    alive_.assign(n + 1, false);
    qflag_.assign(n + 1, false);
    low_.assign(n + 1, LowAug{});
    vbase_.assign(n + 1, -1);
    vcl_.assign(n + 1, -1);
    rlev_.assign(n + 1, kUndecided);
    dec_.assign(n + 1, Dec{});
    pend_.assign(n + 1, {});
}

std::uint64_t RcTree::pack(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    return (static_cast<std::uint64_t>(u) << 32) | static_cast<std::uint64_t>(v);
}

bool RcTree::coin_head(Vertex v, int level) const {
    return coin(seed_, static_cast<std::uint64_t>(v), static_cast<std::uint64_t>(level));
}

int RcTree::new_edge_base(Vertex u, Vertex v) {
    if (u > v) std::swap(u, v);
    int id;
    if (!ebase_free_.empty()) {
        id = ebase_free_.back();
        ebase_free_.pop_back();
    } else {
        id = static_cast<int>(clusters_.size());
        clusters_.emplace_back();
    }
    Cluster& c = clusters_[id];
    c = Cluster{};
    c.kind = Kind::EdgeBase;
    c.rep = u;
    c.rep2 = v;
    c.bnd[0] = u;
    c.bnd[1] = v;
    return id;
}

void RcTree::free_edge_base(int id) { ebase_free_.push_back(id); }

RcTree::Level& RcTree::level(int i) {
    if (static_cast<int>(levels_.size()) <= i) levels_.resize(i + 1);
    return levels_[i];
}

bool RcTree::present(Vertex v, int i) const {
    if (i == 1) return alive_[v];
    if (i >= static_cast<int>(levels_.size())) return false;
    return levels_[i].adj.count(v) > 0;
}

RcTree::Dec RcTree::decide(Vertex v, int i) const {
    const auto& a = levels_[i].adj.at(v);
    auto deg_at = [&](Vertex w) { return levels_[i].adj.at(w).size(); };
    if (a.empty()) return Dec{DecType::Root};
    if (a.size() == 1) {
        Vertex w = a[0].first;
        // an adjacent pair of leaves removes only the smaller id
        if (deg_at(w) == 1 && v > w) return Dec{DecType::Stay};
        return Dec{DecType::Rake, w};
    }
    if (a.size() == 2) {
        Vertex w1 = a[0].first, w2 = a[1].first;
        if (w1 == w2) return Dec{DecType::Stay};  // parallel edges: cycle input
        if (deg_at(w1) == 1 || deg_at(w2) == 1) return Dec{DecType::Stay};
        if (coin_head(v, i) && !coin_head(w1, i) && !coin_head(w2, i))
            return Dec{DecType::Compress, w1, w2};
    }
    return Dec{DecType::Stay};
}

std::vector<RcTree::Entry> RcTree::derive(Vertex v, int i) const {
    std::vector<Entry> out;
    for (const Entry& en : levels_[i].adj.at(v)) {
        Vertex w = en.first;
        if (rlev_[w] == i) {
            const Dec& d = dec_[w];
            if (d.type == DecType::Rake) {
                if (d.a != v) throw std::logic_error("rc: rake target mismatch");
                continue;
            }
            if (d.type == DecType::Compress) {
                out.emplace_back(d.a == v ? d.b : d.a, vcl_[w]);
                continue;
            }
            throw std::logic_error("rc: removed neighbor with positive degree");
        }
        out.push_back(en);
    }
    std::sort(out.begin(), out.end());
    return out;
}

void RcTree::purge_above(Vertex v, int i, std::vector<std::set<Vertex>>& dirty) {
    for (int l = i + 1; l < static_cast<int>(levels_.size()); ++l) {
        auto it = levels_[l].adj.find(v);
        if (it == levels_[l].adj.end()) break;  // presence is contiguous
        std::vector<Entry> entries = it->second;
        levels_[l].adj.erase(it);
        if (static_cast<int>(dirty.size()) <= l) dirty.resize(l + 1);
        for (const Entry& en : entries) {
            auto& wa = levels_[l].adj.at(en.first);
            std::size_t before = wa.size();
            std::erase_if(wa, [&](const Entry& x) { return x.first == v; });
            dirty[l].insert(en.first);
            if ((before == 1) != (wa.size() == 1)) {
                // the neighbor's leaf status flipped: its neighbors decide on it
                for (const Entry& wn : wa) dirty[l].insert(wn.first);
            }
        }
    }
}

void RcTree::run_contraction(std::vector<std::set<Vertex>>& dirty, WorkDepthMeter& meter) {
    std::set<Vertex> rebuild;
    for (int i = 1; i < static_cast<int>(dirty.size()); ++i) {
        if (dirty[i].empty()) continue;
        if (i >= max_levels_)
            throw std::runtime_error("rc: edge set is not a forest");
        meter.add_rounds(1);
        level(i + 1);
        if (static_cast<int>(dirty.size()) <= i + 1) dirty.resize(i + 2);
        std::vector<Vertex> cur(dirty[i].begin(), dirty[i].end());
        dirty[i].clear();
        rebuild.insert(cur.begin(), cur.end());
        meter.add_work(cur.size());

        // decide + apply: recompute the removal decision of each dirty
        // vertex at this level and record the diff
        for (Vertex v : cur) {
            if (!present(v, i)) continue;
            int old_r = rlev_[v];
            Dec old_here = (old_r == i) ? dec_[v] : Dec{DecType::Stay};
            Dec newd = decide(v, i);
            if (old_here == newd) continue;
            if (old_r != kUndecided && old_r >= i) {
                // undo the previously recorded removal (here or above)
                const Dec& od = dec_[v];
                if (od.type == DecType::Rake) {
                    auto& p = pend_[od.a];
                    auto it = std::find(p.begin(), p.end(), std::pair<int, int>{vcl_[v], old_r});
                    if (it != p.end()) p.erase(it);
                    rebuild.insert(od.a);
                }
            }
            if (newd.type == DecType::Stay) {
                rlev_[v] = kUndecided;
                dec_[v] = newd;
            } else {
                if (old_here.type == DecType::Stay) purge_above(v, i, dirty);
                rlev_[v] = i;
                dec_[v] = newd;
                if (vcl_[v] < 0) {
                    vcl_[v] = static_cast<int>(clusters_.size());
                    clusters_.emplace_back();
                }
                if (newd.type == DecType::Rake) {
                    pend_[newd.a].emplace_back(vcl_[v], i);
                    rebuild.insert(newd.a);
                }
            }
        }

        // recompute next-level adjacency for every vertex whose level-i
        // neighborhood may have changed
        std::set<Vertex> affected;
        for (Vertex v : cur) {
            affected.insert(v);
            if (!present(v, i)) continue;
            for (const Entry& en : levels_[i].adj.at(v)) affected.insert(en.first);
        }
        auto& up = levels_[i + 1].adj;
        for (Vertex v : affected) {
            meter.add_work(1);
            if (!present(v, i) || rlev_[v] == i) continue;
            std::vector<Entry> na = derive(v, i);
            meter.add_work(na.size());
            auto it = up.find(v);
            bool was = (it != up.end());
            if (was && it->second == na) continue;
            bool oldleaf = was && it->second.size() == 1;
            bool newleaf = na.size() == 1;
            if (!was || oldleaf != newleaf) {
                // leaf status feeds the neighbors' decisions
                if (was)
                    for (const Entry& en : it->second) dirty[i + 1].insert(en.first);
                for (const Entry& en : na) dirty[i + 1].insert(en.first);
            }
            up[v] = std::move(na);
            dirty[i + 1].insert(v);
        }
    }

    // rebuild changed clusters, then refresh flags/augs bottom-up
    std::set<std::pair<int, int>> q;
    std::set<int> forced;
    for (Vertex v : rebuild) {
        if (!alive_[v]) {
            comps_erase(v);
            continue;
        }
        if (rlev_[v] == kUndecided) throw std::logic_error("rc: contraction did not settle");
        rebuild_cluster(v);
        forced.insert(vcl_[v]);
        q.insert({clusters_[vcl_[v]].level, vcl_[v]});
        meter.add_work(clusters_[vcl_[v]].children.size() + 1);
    }
    std::uint64_t refresh_guard = 0;
    while (!q.empty()) {
        if (++refresh_guard > 4 * clusters_.size() + 64)
            throw std::logic_error("rc: refresh loop did not settle (parent cycle?)");
        auto [lvl, id] = *q.begin();
        q.erase(q.begin());
        Cluster& c = clusters_[id];
        bool changed = forced.count(id) > 0;
        bool nf = false;
        LowAug na;
        for (int ch : c.children) {
            nf = nf || clusters_[ch].flag;
            na = std::min(na, clusters_[ch].aug);
        }
        sort_children(c);
        if (nf != c.flag || !(na == c.aug)) {
            changed = true;
            c.flag = nf;
            c.aug = na;
        }
        meter.add_work(c.children.size() + 1);
        if (c.parent == -1) {
            comps_erase(c.rep);
            comps_.insert({c.flag ? 0 : 1, c.rep});
        } else if (changed) {
            q.insert({clusters_[c.parent].level, c.parent});
        }
    }
}

void RcTree::rebuild_cluster(Vertex v) {
    if (vcl_[v] < 0) {
        vcl_[v] = static_cast<int>(clusters_.size());
        clusters_.emplace_back();
    }
    comps_erase(v);
    int id = vcl_[v];
    Cluster& c = clusters_[id];
    c.kind = Kind::Round;
    c.rep = v;
    c.rep2 = 0;
    c.level = rlev_[v];
    const Dec& d = dec_[v];
    if (d.type == DecType::Rake) {
        c.bnd[0] = d.a;
        c.bnd[1] = 0;
    } else if (d.type == DecType::Compress) {
        c.bnd[0] = d.a;
        c.bnd[1] = d.b;
    } else {
        c.bnd[0] = c.bnd[1] = 0;
        c.parent = -1;
    }
    c.children.clear();
    c.children.push_back(vbase_[v]);
    for (const auto& [cl, lv] : pend_[v]) c.children.push_back(cl);
    for (const Entry& en : levels_[rlev_[v]].adj.at(v)) c.children.push_back(en.second);
    for (int ch : c.children) clusters_[ch].parent = id;
}

void RcTree::sort_children(Cluster& c) {
    std::sort(c.children.begin(), c.children.end(), [&](int a, int b) {
        const Cluster& ca = clusters_[a];
        const Cluster& cb = clusters_[b];
        if (ca.flag != cb.flag) return ca.flag;  // flagged children first
        auto key = [](const Cluster& x) {
            return std::tuple(static_cast<int>(x.kind), x.rep, x.rep2);
        };
        return key(ca) < key(cb);
    });
}

void RcTree::comps_erase(Vertex rep) {
    comps_.erase({0, rep});
    comps_.erase({1, rep});
}

void RcTree::build(const std::vector<std::pair<Vertex, Vertex>>& edges,
                   const std::vector<bool>& qflag, const std::vector<LowAug>& low,
                   WorkDepthMeter& meter) {
    if (static_cast<int>(qflag.size()) != n_ + 1 || static_cast<int>(low.size()) != n_ + 1)
        throw std::invalid_argument("rc build: flag/aug arrays must be 1-based of size n+1");
    clusters_.clear();
    ebase_free_.clear();
    edge_cl_.clear();
    levels_.clear();
    comps_.clear();
    levels_.resize(2);
    for (Vertex v = 1; v <= n_; ++v) {
        alive_[v] = true;
        qflag_[v] = qflag[v];
        low_[v] = low[v];
        low_[v].v = low_[v].none() ? 0 : v;
        if (low_[v].none()) low_[v].x = 0;
        vbase_[v] = static_cast<int>(clusters_.size());
        clusters_.emplace_back();
        Cluster& b = clusters_[vbase_[v]];
        b.kind = Kind::VertexBase;
        b.rep = v;
        b.flag = qflag_[v];
        b.aug = low_[v];
        vcl_[v] = -1;
        rlev_[v] = kUndecided;
        dec_[v] = Dec{};
        pend_[v].clear();
        levels_[1].adj[v];  // present with empty list
    }
    std::vector<std::set<Vertex>> dirty(2);
    for (auto [u, v] : edges) {
        if (u < 1 || u > n_ || v < 1 || v > n_ || u == v)
            throw std::invalid_argument("rc build: bad edge");
        if (edge_cl_.count(pack(u, v))) throw std::invalid_argument("rc build: duplicate edge");
        int id = new_edge_base(u, v);
        edge_cl_[pack(u, v)] = id;
        levels_[1].adj[u].emplace_back(v, id);
        levels_[1].adj[v].emplace_back(u, id);
    }
    for (Vertex v = 1; v <= n_; ++v) {
        auto& a = levels_[1].adj[v];
        std::sort(a.begin(), a.end());
        dirty[1].insert(v);
    }
    meter.add_work(static_cast<std::uint64_t>(n_) + edges.size());
    run_contraction(dirty, meter);
}

void RcTree::batch_update(const std::vector<std::pair<Vertex, Vertex>>& deletions,
                          const std::vector<std::pair<Vertex, Vertex>>& insertions,
                          WorkDepthMeter& meter) {
    std::vector<std::set<Vertex>> dirty(std::max<std::size_t>(levels_.size(), 2));
    auto drop_entry = [&](Vertex a, Vertex b) {
        auto& l = levels_[1].adj.at(a);
        std::erase_if(l, [&](const Entry& x) { return x.first == b; });
    };
    // leaf status of an endpoint feeds its neighbors' decisions, so record
    // degrees before editing and dirty the neighborhood on a flip
    std::map<Vertex, std::size_t> deg_before;
    auto note = [&](Vertex v) {
        if (v >= 1 && v <= n_ && alive_[v] && !deg_before.count(v))
            deg_before[v] = levels_[1].adj.at(v).size();
    };
    for (auto [u, v] : deletions) {
        note(u);
        note(v);
    }
    for (auto [u, v] : insertions) {
        note(u);
        note(v);
    }
    for (auto [u, v] : deletions) {
        auto it = edge_cl_.find(pack(u, v));
        if (it == edge_cl_.end()) throw std::invalid_argument("rc delete: edge not present");
        free_edge_base(it->second);
        edge_cl_.erase(it);
        drop_entry(u, v);
        drop_entry(v, u);
        dirty[1].insert(u);
        dirty[1].insert(v);
    }
    for (auto [u, v] : insertions) {
        if (u < 1 || u > n_ || v < 1 || v > n_ || u == v || !alive_[u] || !alive_[v])
            throw std::invalid_argument("rc insert: bad endpoints");
        if (edge_cl_.count(pack(u, v))) throw std::invalid_argument("rc insert: edge already present");
        int id = new_edge_base(u, v);
        edge_cl_[pack(u, v)] = id;
        auto ins = [&](Vertex a, Vertex b) {
            auto& l = levels_[1].adj.at(a);
            l.insert(std::upper_bound(l.begin(), l.end(), Entry{b, id}), Entry{b, id});
        };
        ins(u, v);
        ins(v, u);
        dirty[1].insert(u);
        dirty[1].insert(v);
    }
    for (auto& [v, db] : deg_before) {
        std::size_t da = levels_[1].adj.at(v).size();
        if ((db == 1) != (da == 1))
            for (const Entry& en : levels_[1].adj.at(v)) dirty[1].insert(en.first);
    }
    meter.add_work(deletions.size() + insertions.size());
    run_contraction(dirty, meter);
}

void RcTree::remove_isolated(const std::vector<Vertex>& vertices, WorkDepthMeter& meter) {
    for (Vertex v : vertices) {
        if (v < 1 || v > n_ || !alive_[v])
            throw std::invalid_argument("rc remove: vertex not present");
        if (!levels_[1].adj.at(v).empty())
            throw std::invalid_argument("rc remove: vertex still has edges");
    }
    for (Vertex v : vertices) {
        alive_[v] = false;
        comps_erase(v);
        levels_[1].adj.erase(v);
        rlev_[v] = kUndecided;
        dec_[v] = Dec{};
        meter.add_work(1);
    }
    meter.add_rounds(1);
}

void RcTree::set_vertex_low(Vertex v, const LowAug& aug, WorkDepthMeter& meter) {
    if (v < 1 || v > n_ || !alive_[v]) throw std::invalid_argument("rc: vertex not present");
    low_[v] = aug;
    low_[v].v = low_[v].none() ? 0 : v;
    if (low_[v].none()) low_[v].x = 0;
    Cluster& b = clusters_[vbase_[v]];
    if (b.aug == low_[v]) return;
    b.aug = low_[v];
    refresh_from_base(v, meter);
}

void RcTree::set_vertex_flag(Vertex v, bool f, WorkDepthMeter& meter) {
    if (v < 1 || v > n_ || !alive_[v]) throw std::invalid_argument("rc: vertex not present");
    if (qflag_[v] == f) return;
    qflag_[v] = f;
    clusters_[vbase_[v]].flag = f;
    refresh_from_base(v, meter);
}

void RcTree::refresh_from_base(Vertex v, WorkDepthMeter& meter) {
    // walk the parent chain, recomputing flag/aug with early exit
    int id = clusters_[vbase_[v]].parent;
    std::uint64_t steps = 0;
    while (id != -1) {
        Cluster& c = clusters_[id];
        bool nf = false;
        LowAug na;
        for (int ch : c.children) {
            nf = nf || clusters_[ch].flag;
            na = std::min(na, clusters_[ch].aug);
        }
        sort_children(c);
        steps += c.children.size() + 1;
        bool changed = (nf != c.flag) || !(na == c.aug);
        c.flag = nf;
        c.aug = na;
        if (c.parent == -1) {
            comps_erase(c.rep);
            comps_.insert({c.flag ? 0 : 1, c.rep});
            break;
        }
        if (!changed) break;
        id = c.parent;
    }
    meter.add_work(steps);
    meter.add_rounds(1);
}

int RcTree::component_of(Vertex v) const {
    if (v < 1 || v > n_ || !alive_[v]) throw std::invalid_argument("rc: vertex not present");
    int id = vbase_[v];
    while (clusters_[id].parent != -1) id = clusters_[id].parent;
    return id;
}

std::optional<int> RcTree::find_cc(WorkDepthMeter& meter) const {
    meter.add_work(1);
    meter.add_rounds(1);
    if (comps_.empty() || comps_.begin()->first != 0) return std::nullopt;
    return vcl_[comps_.begin()->second];
}

RcTree::LowestInfo RcTree::lowest_node(int comp, WorkDepthMeter& meter) const {
    const Cluster& c = clusters_[comp];
    meter.add_work(1);
    meter.add_rounds(1);
    if (c.aug.none()) throw std::runtime_error("lowest_node: no attachment in component");
    return LowestInfo{c.aug.v, c.aug.x, c.aug.d};
}

std::vector<int> RcTree::chain_of(Vertex x) const {
    std::vector<int> chain;
    int id = vbase_[x];
    chain.push_back(id);
    while (clusters_[id].parent != -1) {
        id = clusters_[id].parent;
        chain.push_back(id);
    }
    return chain;
}

int RcTree::edge_child_with_boundary(const Cluster& c, Vertex t) const {
    for (int ch : c.children) {
        const Cluster& cc = clusters_[ch];
        if (cc.kind == Kind::VertexBase) continue;
        if (cc.bnd[0] == t || cc.bnd[1] == t) return ch;
    }
    throw std::logic_error("rc: no edge child with requested boundary");
}

std::vector<Vertex> RcTree::expand_edge(int ecl, Vertex from, Vertex to,
                                        WorkDepthMeter& meter) const {
    const Cluster& c = clusters_[ecl];
    if (c.kind == Kind::EdgeBase) {
        meter.add_work(1);
        return {from, to};
    }
    Vertex z = c.rep;
    auto p1 = expand_edge(edge_child_with_boundary(c, from), from, z, meter);
    auto p2 = expand_edge(edge_child_with_boundary(c, to), z, to, meter);
    p1.insert(p1.end(), p2.begin() + 1, p2.end());
    meter.add_work(1);
    return p1;
}

std::vector<Vertex> RcTree::path_from(Vertex x, const std::vector<int>& chain, int ci,
                                      Vertex t, WorkDepthMeter& meter) const {
    meter.add_work(1);
    if (ci == 0) return {x};  // base cluster: t == x
    const Cluster& c = clusters_[chain[ci]];
    Vertex r = c.rep;
    int cx = chain[ci - 1];
    if (t == r) {
        if (ci - 1 == 0) return {x};  // x == r
        return path_from(x, chain, ci - 1, r, meter);
    }
    int et = edge_child_with_boundary(c, t);
    if (cx == et) return path_from(x, chain, ci - 1, t, meter);
    std::vector<Vertex> first =
        (ci - 1 == 0) ? std::vector<Vertex>{x} : path_from(x, chain, ci - 1, r, meter);
    auto mid = expand_edge(et, r, t, meter);
    first.insert(first.end(), mid.begin() + 1, mid.end());
    return first;
}

std::vector<Vertex> RcTree::find_path_p2p(Vertex x, Vertex y, WorkDepthMeter& meter) const {
    if (x < 1 || x > n_ || y < 1 || y > n_ || !alive_[x] || !alive_[y])
        throw std::invalid_argument("find_path_p2p: vertex not present");
    if (x == y) return {x};
    auto cx = chain_of(x);
    auto cy = chain_of(y);
    std::unordered_map<int, int> pos;
    for (int i = 0; i < static_cast<int>(cx.size()); ++i) pos[cx[i]] = i;
    int ci = -1, cj = -1;
    for (int j = 0; j < static_cast<int>(cy.size()); ++j) {
        auto it = pos.find(cy[j]);
        if (it != pos.end()) {
            ci = it->second;
            cj = j;
            break;
        }
    }
    if (ci < 0) throw std::invalid_argument("find_path_p2p: different components");
    Vertex r = clusters_[cx[ci]].rep;
    auto px = path_from(x, cx, ci, r, meter);
    auto py = path_from(y, cy, cj, r, meter);
    px.insert(px.end(), py.rbegin() + 1, py.rend());
    meter.add_work(cx.size() + cy.size());
    meter.add_rounds(std::bit_width(static_cast<std::uint64_t>(px.size()) + cx.size()));
    return px;
}

std::vector<Vertex> RcTree::findpath_into(int cl, Vertex z, WorkDepthMeter& meter) const {
    const Cluster& c = clusters_[cl];
    meter.add_work(1);
    if (c.kind != Kind::Round) throw std::logic_error("rc: findpath_into on base cluster");
    Vertex w = c.rep;
    int ez = edge_child_with_boundary(c, z);
    if (clusters_[ez].flag) return findpath_into(ez, z, meter);
    auto part = expand_edge(ez, z, w, meter);
    if (qflag_[w]) return part;
    int y2 = -1;
    for (int ch : c.children) {  // flagged-first order makes this the first hit
        if (ch != ez && clusters_[ch].flag && clusters_[ch].kind != Kind::VertexBase) {
            y2 = ch;
            break;
        }
    }
    if (y2 < 0) throw std::logic_error("rc: flagged cluster without flagged part");
    auto rest = findpath_into(y2, w, meter);
    part.insert(part.end(), rest.begin() + 1, rest.end());
    return part;
}

std::vector<Vertex> RcTree::find_path_s2p(int comp, Vertex x, WorkDepthMeter& meter) const {
    if (x < 1 || x > n_ || !alive_[x]) throw std::invalid_argument("find_path_s2p: vertex not present");
    const Cluster& root = clusters_[comp];
    if (root.parent != -1 || !root.flag)
        throw std::invalid_argument("find_path_s2p: not a flagged component");
    auto chain = chain_of(x);
    if (chain.back() != comp) throw std::invalid_argument("find_path_s2p: vertex outside component");
    if (qflag_[x]) return {x};
    int ai = 0;
    while (!clusters_[chain[ai]].flag) ++ai;
    const Cluster& a = clusters_[chain[ai]];
    Vertex r = a.rep;
    meter.add_rounds(std::bit_width(static_cast<std::uint64_t>(chain.size()) + 1));
    if (qflag_[r]) return path_from(x, chain, ai, r, meter);
    int y = -1;
    for (int ch : a.children) {
        if (ch != chain[ai - 1] && clusters_[ch].flag) {
            y = ch;
            break;
        }
    }
    if (y < 0) throw std::logic_error("rc: flagged ancestor without flagged sibling part");
    auto p1 = path_from(x, chain, ai, r, meter);
    auto p2 = findpath_into(y, r, meter);
    p1.insert(p1.end(), p2.begin() + 1, p2.end());
    return p1;
}

void RcTree::debug_dump(std::ostream& os) const {
    os << "levels=" << levels_.size() - 1 << "\n";
    for (int i = 1; i < static_cast<int>(levels_.size()); ++i) {
        os << "L" << i << ":";
        std::map<Vertex, std::vector<Entry>> srt(levels_[i].adj.begin(), levels_[i].adj.end());
        for (auto& [v, es] : srt) {
            os << " " << v << "[";
            for (auto& [w, e] : es) os << w << "/c" << e << " ";
            os << "]";
        }
        os << "\n";
    }
    for (Vertex v = 1; v <= n_; ++v) {
        if (!alive_[v]) continue;
        os << "v" << v << " rlev=" << (rlev_[v] == kUndecided ? -1 : rlev_[v])
           << " dec=" << static_cast<int>(dec_[v].type) << "(" << dec_[v].a << "," << dec_[v].b
           << ") vcl=" << vcl_[v] << " pend=";
        for (auto& [cl, lv] : pend_[v]) os << cl << "@" << lv << " ";
        if (vcl_[v] >= 0) {
            const Cluster& c = clusters_[vcl_[v]];
            os << " cl{lvl=" << c.level << " par=" << c.parent << " ch=";
            for (int ch : c.children) os << ch << " ";
            os << "}";
        }
        os << "\n";
    }
}

bool RcTree::check_invariants() const {
    // parent/child mutual consistency plus flag/aug recomputation
    for (Vertex v = 1; v <= n_; ++v) {
        if (!alive_[v]) continue;
        if (rlev_[v] == kUndecided || vcl_[v] < 0) return false;
        const Cluster& c = clusters_[vcl_[v]];
        if (c.rep != v || c.level != rlev_[v]) return false;
        for (int ch : c.children)
            if (clusters_[ch].parent != vcl_[v]) return false;
        bool f = false;
        LowAug aug;
        for (int ch : c.children) {
            f = f || clusters_[ch].flag;
            aug = std::min(aug, clusters_[ch].aug);
        }
        if (f != c.flag || !(aug == c.aug)) return false;
        bool sorted_ok = true;
        for (std::size_t i = 1; i < c.children.size(); ++i)
            if (!clusters_[c.children[i - 1]].flag && clusters_[c.children[i]].flag)
                sorted_ok = false;
        if (!sorted_ok) return false;
    }
    // every alive vertex reaches a registered component root
    for (Vertex v = 1; v <= n_; ++v) {
        if (!alive_[v]) continue;
        int id = vbase_[v];
        while (clusters_[id].parent != -1) id = clusters_[id].parent;
        const Cluster& rc = clusters_[id];
        if (rc.bnd[0] != 0) return false;
        if (!comps_.count({rc.flag ? 0 : 1, rc.rep})) return false;
    }
    return true;
}

}  // namespace pardfs
