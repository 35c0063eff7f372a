#include "pardfs/separator.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <unordered_map>

#include "pardfs/components.hpp"
#include "pardfs/matching.hpp"
#include "pardfs/rng.hpp"

namespace pardfs {

namespace {

int floor_sqrt(int n) {
    int r = static_cast<int>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && static_cast<long long>(r) * r > n) --r;
    while (static_cast<long long>(r + 1) * (r + 1) <= n) ++r;
    return r;
}

std::uint64_t pack(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

std::vector<Vertex> to_vector(const PathList& p) {
    return std::vector<Vertex>(p.nodes.begin(), p.nodes.end());
}

}  // namespace

std::vector<PathList> build_trivial_separator(const Graph& g) {
    std::vector<PathList> q;
    q.reserve(g.num_vertices());
    for (Vertex v = 1; v <= g.num_vertices(); ++v) q.push_back(PathList(v, {v}));
    return q;
}

bool is_separator(const Graph& g, const std::vector<PathList>& q, WorkDepthMeter& meter) {
    std::vector<bool> removed(g.num_vertices() + 1, false);
    for (const PathList& p : q)
        for (Vertex v : p.nodes) {
            if (!g.valid_vertex(v)) throw std::invalid_argument("is_separator: bad vertex");
            if (removed[v]) throw std::invalid_argument("is_separator: paths overlap");
            removed[v] = true;
        }
    CcLabeling cc = connected_components(g, removed, meter);
    return 2 * cc.max_component_size() <= g.num_vertices();
}

std::vector<Vertex> match_heads(const Graph& gp, ActiveGraph& ag,
                                const std::vector<Vertex>& heads, std::uint64_t seed,
                                WorkDepthMeter& meter) {
    const int n = gp.num_vertices();
    std::vector<Vertex> match(heads.size(), 0);
    std::vector<int> pending(heads.size());
    for (std::size_t i = 0; i < heads.size(); ++i) pending[i] = static_cast<int>(i);

    for (int phase = 0; !pending.empty(); ++phase) {
        const int t = phase >= 30 ? n : std::min(n, 1 << phase);
        const bool last = t >= n;
        std::vector<Vertex> hs;
        hs.reserve(pending.size());
        for (int idx : pending) hs.push_back(heads[idx]);
        auto sel = ag.query_active(hs, std::max(t, 1), meter);

        // bipartite selection graph: heads on one side, selected available
        // vertices on the other
        std::unordered_map<Vertex, int> local;  // selected vertex -> local id
        std::vector<Vertex> chosen;
        std::vector<std::pair<Vertex, Vertex>> hedges;
        for (std::size_t j = 0; j < pending.size(); ++j)
            for (Vertex v : sel[j]) {
                auto [it, fresh] = local.try_emplace(v, 0);
                if (fresh) {
                    chosen.push_back(v);
                    it->second = static_cast<int>(pending.size() + chosen.size());
                }
                hedges.emplace_back(static_cast<Vertex>(j + 1), it->second);
            }
        Graph h(static_cast<int>(pending.size() + chosen.size()), hedges);
        auto mm = maximal_matching(h, mix64(seed + 0x51ed2701 * (phase + 1)), meter);

        std::vector<char> matched_now(pending.size(), 0);
        std::vector<Vertex> claimed;
        const int hcount = static_cast<int>(pending.size());
        for (EdgeId e : mm) {
            Vertex a = h.edge_u(e), b = h.edge_v(e);
            if (a > hcount) std::swap(a, b);  // head side has the smaller local ids
            int j = a - 1;
            Vertex v = chosen[b - hcount - 1];
            match[pending[j]] = v;
            matched_now[j] = 1;
            claimed.push_back(v);
        }
        if (!claimed.empty()) ag.make_inactive(claimed, meter);

        std::vector<int> next;
        for (std::size_t j = 0; j < pending.size(); ++j)
            if (!matched_now[j] && !sel[j].empty() && !last) next.push_back(pending[j]);
        pending = std::move(next);
        meter.add_rounds(1);
        if (last) break;
    }
    return match;
}

MergeResult merge_paths(const Graph& g, std::vector<PathList>& longs,
                        const std::vector<PathList>& shorts, std::uint64_t seed,
                        const MergeOptions& opts, WorkDepthMeter& meter) {
    const int n = g.num_vertices();
    if (n < 2) throw std::invalid_argument("merge_paths: graph too small");
    int threshold = opts.termination_threshold;
    if (threshold < 0) threshold = floor_sqrt(n);
    if (opts.enforce_precondition &&
        static_cast<int>(longs.size() + shorts.size()) < 48 * floor_sqrt(n))
        throw std::invalid_argument("merge_paths: too few paths for a merge round");

    // membership maps; also catches overlapping input paths
    std::vector<int> short_of(n + 1, -1);
    std::vector<char> on_long(n + 1, 0);
    for (std::size_t si = 0; si < shorts.size(); ++si)
        for (Vertex v : shorts[si].nodes) {
            if (short_of[v] >= 0) throw std::invalid_argument("merge_paths: paths overlap");
            short_of[v] = static_cast<int>(si);
        }
    for (const PathList& l : longs)
        for (Vertex v : l.nodes) {
            if (on_long[v] || short_of[v] >= 0)
                throw std::invalid_argument("merge_paths: paths overlap");
            on_long[v] = 1;
        }

    // contract every short path into its front vertex
    std::vector<Vertex> vmap(n + 1);
    for (Vertex v = 1; v <= n; ++v)
        vmap[v] = short_of[v] >= 0 ? shorts[short_of[v]].nodes.front() : v;
    struct Cand {
        std::uint64_t key;
        Vertex gu, gv;
    };
    std::vector<Cand> cand;
    cand.reserve(g.num_edges());
    for (EdgeId e = 1; e <= g.num_edges(); ++e) {
        Vertex mu = vmap[g.edge_u(e)], mv = vmap[g.edge_v(e)];
        if (mu == mv) continue;
        cand.push_back({pack(mu, mv), g.edge_u(e), g.edge_v(e)});
    }
    std::sort(cand.begin(), cand.end(), [](const Cand& a, const Cand& b) {
        return a.key != b.key ? a.key < b.key : std::make_pair(a.gu, a.gv) <
                                                    std::make_pair(b.gu, b.gv);
    });
    std::vector<std::pair<Vertex, Vertex>> pedges;
    std::unordered_map<std::uint64_t, std::pair<Vertex, Vertex>> prov;
    prov.reserve(cand.size());
    for (const Cand& c : cand)
        if (prov.try_emplace(c.key, std::make_pair(c.gu, c.gv)).second)
            pedges.emplace_back(static_cast<Vertex>(c.key >> 32),
                                static_cast<Vertex>(c.key & 0xffffffffULL));
    meter.add_work(cand.size() + 1);
    meter.add_rounds(1);
    Graph gp(n, pedges);
    ActiveGraph ag(gp, meter);

    // long-path vertices are in a path, not available
    std::vector<Vertex> longverts;
    for (const PathList& l : longs)
        for (Vertex v : l.nodes) longverts.push_back(v);
    if (!longverts.empty()) ag.make_inactive(longverts, meter);

    // orient every long path so the smaller-id endpoint is the head (back)
    std::vector<std::vector<Vertex>> orig(longs.size());
    for (std::size_t i = 0; i < longs.size(); ++i) {
        if (longs[i].empty()) throw std::invalid_argument("merge_paths: empty long path");
        if (longs[i].nodes.back() > longs[i].nodes.front()) longs[i].nodes.reverse();
        orig[i] = to_vector(longs[i]);
    }

    MergeResult res;
    res.outcome.resize(longs.size());
    res.dead.assign(n + 1, 0);
    std::vector<int> active;
    for (std::size_t i = 0; i < longs.size(); ++i) {
        res.outcome[i].fate = MergeResult::Fate::Unmatched;
        res.outcome[i].kept = static_cast<int>(orig[i].size());
        active.push_back(static_cast<int>(i));
    }

    const std::uint64_t step_guard = 4ULL * n + 16;
    while (!active.empty() &&
           !(threshold > 0 && static_cast<int>(active.size()) < threshold)) {
        if (res.steps > step_guard)
            throw std::logic_error("merge_paths: extension loop did not terminate");
        std::vector<Vertex> heads;
        heads.reserve(active.size());
        for (int i : active) {
            const auto& oc = res.outcome[i];
            heads.push_back(oc.ext.empty() ? orig[i][oc.kept - 1] : oc.ext.back());
        }
        auto match =
            match_heads(gp, ag, heads, mix64(seed) + res.steps * 0x100000001b3ULL, meter);

        std::vector<int> next;
        for (std::size_t j = 0; j < active.size(); ++j) {
            int i = active[j];
            auto& oc = res.outcome[i];
            Vertex got = match[j];
            if (got != 0) {
                if (short_of[got] >= 0) {
                    // arrived on a contracted short path; resolve the real
                    // endpoint through the originating edge
                    auto [gu, gv] = prov.at(pack(heads[j], got));
                    oc.fate = MergeResult::Fate::Matched;
                    oc.short_index = short_of[got];
                    oc.y = short_of[gu] == oc.short_index ? gu : gv;
                } else {
                    oc.ext.push_back(got);
                    next.push_back(i);
                }
            } else {
                res.dead[heads[j]] = 1;
                if (!oc.ext.empty())
                    oc.ext.pop_back();
                else if (--oc.kept == 0)
                    oc.fate = MergeResult::Fate::Dead;
                if (oc.fate != MergeResult::Fate::Dead) next.push_back(i);
            }
        }
        active = std::move(next);
        ++res.steps;
        meter.add_rounds(1);
        meter.add_work(heads.size());
    }

    res.available.assign(n + 1, 0);
    for (Vertex v = 1; v <= n; ++v) res.available[v] = ag.active(vmap[v]) ? 1 : 0;
    return res;
}

JoinResult apply_joins(const std::vector<PathList>& longs,
                       const std::vector<PathList>& shorts, const MergeResult& mr,
                       WorkDepthMeter& meter) {
    if (mr.outcome.size() != longs.size())
        throw std::invalid_argument("apply_joins: outcome/path count mismatch");
    JoinResult jr;
    jr.shorts = shorts;
    std::vector<char> short_gone(shorts.size(), 0);

    for (std::size_t i = 0; i < longs.size(); ++i) {
        const auto& oc = mr.outcome[i];
        std::vector<Vertex> orig = to_vector(longs[i]);
        if (oc.kept < 0 || oc.kept > static_cast<int>(orig.size()))
            throw std::invalid_argument("apply_joins: inconsistent junction");
        if (oc.fate == MergeResult::Fate::Dead) {
            jr.discarded.push_back(std::move(orig));
            continue;
        }
        PathList nl;
        nl.id = longs[i].id;
        nl.nodes.assign(orig.begin(), orig.begin() + oc.kept);
        for (Vertex v : oc.ext) nl.nodes.push_back(v);
        if (oc.fate == MergeResult::Fate::Matched) {
            if (oc.short_index < 0 || oc.short_index >= static_cast<int>(shorts.size()) ||
                short_gone[oc.short_index])
                throw std::invalid_argument("apply_joins: inconsistent junction");
            PathList& s = jr.shorts[oc.short_index];
            PathPosition pos = locate_on_path(s, oc.y, meter);
            auto it = s.nodes.begin();
            std::advance(it, pos.rank - 1);  // *it == y
            nl.nodes.push_back(oc.y);
            if (prefix_is_long_half(pos)) {
                // the part before y joins the long path, reversed so it
                // continues outward from y; the part after y remains short
                for (auto r = std::make_reverse_iterator(it); r != s.nodes.rend(); ++r)
                    nl.nodes.push_back(*r);
                s.nodes.erase(s.nodes.begin(), std::next(it));
            } else {
                for (auto f = std::next(it); f != s.nodes.end(); ++f)
                    nl.nodes.push_back(*f);
                s.nodes.erase(it, s.nodes.end());
            }
            if (s.empty()) short_gone[oc.short_index] = 1;
            meter.add_work(pos.total);
        }
        if (oc.kept < static_cast<int>(orig.size()))
            jr.discarded.emplace_back(orig.begin() + oc.kept, orig.end());
        jr.longs.push_back(std::move(nl));
    }

    std::vector<PathList> kept_shorts;
    for (std::size_t si = 0; si < jr.shorts.size(); ++si) {
        if (short_gone[si])
            ++jr.shorts_removed;
        else
            kept_shorts.push_back(std::move(jr.shorts[si]));
    }
    jr.shorts = std::move(kept_shorts);
    meter.add_rounds(1);
    return jr;
}

namespace {

std::vector<PathList> renumber(std::vector<PathList> q) {
    int id = 0;
    for (PathList& p : q) p.id = ++id;
    return q;
}

// Connector interiors as fresh paths: the vertices a long path picked up
// outside the original separator (junction and arrival endpoints excluded,
// they stay on their own paths).
void append_interiors(const MergeResult& mr, std::vector<PathList>& out) {
    for (const auto& oc : mr.outcome) {
        if (oc.fate == MergeResult::Fate::Dead || oc.ext.empty()) continue;
        PathList p;
        p.nodes.assign(oc.ext.begin(), oc.ext.end());
        out.push_back(std::move(p));
    }
}

}  // namespace

std::vector<PathList> reduce_paths(const Graph& g, std::vector<PathList> q,
                                   std::uint64_t seed, WorkDepthMeter& meter) {
    const int n = g.num_vertices();
    const int k = static_cast<int>(q.size());
    if (k <= 48 * floor_sqrt(n))
        throw std::invalid_argument("reduce_paths: separator is already small");

    std::vector<std::int64_t> lens;  // lengths are list-ranked in batch
    for (PathList& p : q) {
        WorkDepthMeter sub;
        lens.push_back(list_rank(p, std::vector<std::int64_t>(p.length(), 1), sub).back());
        meter.add_work(sub.work_units);
    }
    meter.add_rounds(1);
    std::vector<int> order(q.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return lens[a] != lens[b] ? lens[a] > lens[b] : q[a].id < q[b].id;
    });
    std::vector<PathList> L, S;
    for (std::size_t i = 0; i < order.size(); ++i)
        (static_cast<int>(i) < k / 4 ? L : S).push_back(std::move(q[order[i]]));

    const int max_rounds = 9 * std::bit_width(static_cast<unsigned>(std::max(n - 1, 1)));
    int removed = 0;
    for (int round = 0; round < max_rounds && 4 * removed < k; ++round) {
        // the entry check above covers the whole run: later rounds may sit
        // below the threshold once enough shorts have been consumed
        MergeOptions mo;
        mo.enforce_precondition = false;
        MergeResult mr =
            merge_paths(g, L, S, mix64(seed + 0x9e3779b9ULL * (round + 1)), mo, meter);
        int p1 = 0;
        for (const auto& oc : mr.outcome)
            if (oc.fate == MergeResult::Fate::Matched) ++p1;

        if (12 * p1 < k) {
            // too few paths got matched: one of the two sides can be
            // dropped outright
            std::vector<PathList> qa;  // joined longs + connectors + all shorts
            for (std::size_t i = 0; i < L.size(); ++i)
                if (mr.outcome[i].fate != MergeResult::Fate::Dead) qa.push_back(L[i]);
            append_interiors(mr, qa);
            qa.insert(qa.end(), S.begin(), S.end());
            if (is_separator(g, qa, meter)) return renumber(std::move(qa));

            std::vector<PathList> qb;  // all longs + connectors + joined shorts
            qb = L;
            append_interiors(mr, qb);
            for (const auto& oc : mr.outcome)
                if (oc.fate == MergeResult::Fate::Matched) qb.push_back(S[oc.short_index]);
            if (is_separator(g, qb, meter)) return renumber(std::move(qb));
            throw std::logic_error("reduce_paths: no fallback separator exists");
        }

        JoinResult jr = apply_joins(L, S, mr, meter);
        std::vector<PathList> next = jr.longs;
        next.insert(next.end(), jr.shorts.begin(), jr.shorts.end());
        if (!is_separator(g, next, meter)) {
            // the discarded tails broke the separator: keep the original
            // longs and drop the untouched shorts instead
            std::vector<PathList> qc = L;
            append_interiors(mr, qc);
            for (const auto& oc : mr.outcome)
                if (oc.fate == MergeResult::Fate::Matched) qc.push_back(S[oc.short_index]);
            if (!is_separator(g, qc, meter))
                throw std::logic_error("reduce_paths: no fallback separator exists");
            return renumber(std::move(qc));
        }
        removed += jr.shorts_removed;
        L = std::move(jr.longs);
        S = std::move(jr.shorts);
    }
    if (4 * removed < k) throw std::logic_error("reduce_paths: made no progress");

    std::vector<PathList> out = std::move(L);
    out.insert(out.end(), std::make_move_iterator(S.begin()),
               std::make_move_iterator(S.end()));
    if (48 * static_cast<int>(out.size()) > 47 * k)
        throw std::logic_error("reduce_paths: reduction fell short");
    return renumber(std::move(out));
}

std::vector<PathList> find_separator(const Graph& g, std::uint64_t seed,
                                     WorkDepthMeter& meter) {
    CcLabeling cc = connected_components(g, meter);
    if (cc.num_components() != 1)
        throw std::invalid_argument("find_separator: graph is not connected");
    std::vector<PathList> q = build_trivial_separator(g);
    const int limit = 48 * floor_sqrt(g.num_vertices());
    int iter = 0;
    while (static_cast<int>(q.size()) > limit) {
        std::size_t before = q.size();
        q = reduce_paths(g, std::move(q), mix64(seed) + 0xbf58476d1ce4e5b9ULL * ++iter,
                         meter);
        if (48 * q.size() > 47 * before)
            throw std::logic_error("find_separator: reduction stalled");
    }
    return q;
}

}  // namespace pardfs
