#pragma once

#include <cstdint>
#include <vector>

#include "pardfs/active_graph.hpp"
#include "pardfs/graph.hpp"
#include "pardfs/meter.hpp"
#include "pardfs/path_list.hpp"

namespace pardfs {

// One singleton path per vertex; trivially a separator.
std::vector<PathList> build_trivial_separator(const Graph& g);

// True iff the largest component of g minus the path vertices has at most
// n/2 vertices. Throws if the paths share a vertex.
bool is_separator(const Graph& g, const std::vector<PathList>& q,
                  WorkDepthMeter& meter = null_meter());

struct MergeOptions {
    // Stop extending once fewer than this many heads still attempt to
    // match; -1 selects floor(sqrt(n)), 0 runs the process to the end
    // (used by the small-instance property tests).
    int termination_threshold = -1;
    // Require |longs| + |shorts| >= 48*floor(sqrt(n)); the small-instance
    // tests disable this, nothing in the procedure itself needs it.
    bool enforce_precondition = true;
};

// Outcome of one merge round. Connector paths are implicit: for a matched
// long path the connector runs [junction, ext..., y]; for one still active
// at termination it is [junction, ext...]; the junction is the last kept
// vertex of the long path.
struct MergeResult {
    enum class Fate { Matched, Unmatched, Dead };
    struct Outcome {
        Fate fate;
        int kept = 0;                // surviving original vertices (from the non-head end)
        std::vector<Vertex> ext;     // joined outside vertices, in path order
        int short_index = -1;        // Matched: index into shorts
        Vertex y = 0;                // Matched: arrival vertex on that short path
    };
    std::vector<Outcome> outcome;    // one per long path
    std::vector<char> dead;          // per vertex: died during the process
    std::vector<char> available;     // per vertex: still available at the end
                                     // (short-path members share their path's state)
    std::uint64_t steps = 0;
};

// Grows every long path from its head (the smaller-id endpoint; the list
// is reoriented so the head is at the back) through available vertices of
// the short-contracted graph until it reaches a short path or dies back.
// Guarantees at the end: a head failed to extend only when all of its
// available neighbors were claimed by other heads that step, and at most
// termination_threshold paths are left unmatched but alive.
MergeResult merge_paths(const Graph& g, std::vector<PathList>& longs,
                        const std::vector<PathList>& shorts, std::uint64_t seed,
                        const MergeOptions& opts = {},
                        WorkDepthMeter& meter = null_meter());

// One matching step: every head is either paired with a distinct available
// neighbor (marked inactive in ag) or is left with zero available
// neighbors. Returns the partner per head, 0 if unmatched. Built from
// doubling selection phases with a maximal matching per phase.
std::vector<Vertex> match_heads(const Graph& gp, ActiveGraph& ag,
                                const std::vector<Vertex>& heads, std::uint64_t seed,
                                WorkDepthMeter& meter = null_meter());

// Rewrites the paths per a merge round: a matched long path becomes
// kept-prefix + connector + the longer half of its short path, the short
// path keeps the shorter half (dropped entirely when nothing remains); an
// unmatched-but-alive path keeps its prefix plus extension; a fully dead
// path disappears. Dead tails are returned as discarded pieces.
struct JoinResult {
    std::vector<PathList> longs;
    std::vector<PathList> shorts;
    std::vector<std::vector<Vertex>> discarded;
    int shorts_removed = 0;
};
JoinResult apply_joins(const std::vector<PathList>& longs,
                       const std::vector<PathList>& shorts, const MergeResult& mr,
                       WorkDepthMeter& meter = null_meter());

// Shrinks a separator of k > 48*floor(sqrt(n)) paths to at most (47/48)k
// paths, preserving the separator property. Repeatedly merges long and
// short paths; when a round matches too few paths or the rewrite breaks
// the separator, one of the two fallback separators is returned instead.
std::vector<PathList> reduce_paths(const Graph& g, std::vector<PathList> q,
                                   std::uint64_t seed,
                                   WorkDepthMeter& meter = null_meter());

// Separator of at most 48*floor(sqrt(n)) vertex-disjoint paths for a
// connected graph: the trivial separator shrunk by reduce_paths rounds.
std::vector<PathList> find_separator(const Graph& g, std::uint64_t seed,
                                     WorkDepthMeter& meter = null_meter());

}  // namespace pardfs
