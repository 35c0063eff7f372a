#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

namespace pardfs {

using Vertex = int;  // 1-based vertex ids
using EdgeId = int;  // 1-based edge ids

// Immutable undirected graph. All dynamism in the pipeline lives in
// decremental structures layered on top; the input graph never changes
// after loading.
class Graph {
public:
    Graph() = default;
    // edges are 1-based vertex pairs; self-loops and out-of-range ids are
    // rejected. Parallel edges are kept as given.
    Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges);

    int num_vertices() const { return n_; }
    int num_edges() const { return static_cast<int>(edge_u_.size()); }

    Vertex edge_u(EdgeId e) const { return edge_u_[e - 1]; }
    Vertex edge_v(EdgeId e) const { return edge_v_[e - 1]; }
    // The endpoint of e that is not v.
    Vertex edge_other(EdgeId e, Vertex v) const {
        return edge_u(e) == v ? edge_v(e) : edge_u(e);
    }

    // Incident edge ids of v, in input order.
    const std::vector<EdgeId>& incident(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }

    // Neighbor list of v (order matches incident()).
    std::vector<Vertex> neighbors(Vertex v) const;

    bool valid_vertex(Vertex v) const { return v >= 1 && v <= n_; }

private:
    int n_ = 0;
    std::vector<Vertex> edge_u_, edge_v_;
    std::vector<std::vector<EdgeId>> adj_;  // index 0 unused
};

// Parses the "n m" header plus one "u v" line per edge.
Graph load_graph(std::istream& in);
Graph load_graph_file(const std::string& path);

// Induced subgraph over `vertices` (1-based ids of g). Vertices are
// relabeled 1..k in the order given; to_sub maps original->new (0 when
// absent), from_sub maps new->original.
struct Subgraph {
    Graph graph;
    std::vector<Vertex> from_sub;  // index 1..k
    std::vector<Vertex> to_sub;    // index 1..n of g
};
Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices);

}  // namespace pardfs
