#include "pardfs/graph.hpp"

#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace pardfs {

Graph::Graph(int n, const std::vector<std::pair<Vertex, Vertex>>& edges) : n_(n) {
    if (n < 0) throw std::invalid_argument("graph: negative vertex count");
    adj_.assign(n_ + 1, {});
    edge_u_.reserve(edges.size());
    edge_v_.reserve(edges.size());
    for (const auto& [u, v] : edges) {
        if (u < 1 || u > n_ || v < 1 || v > n_)
            throw std::invalid_argument("graph: vertex id out of range");
        if (u == v) throw std::invalid_argument("graph: self-loop rejected");
        edge_u_.push_back(u);
        edge_v_.push_back(v);
        EdgeId id = static_cast<EdgeId>(edge_u_.size());
        adj_[u].push_back(id);
        adj_[v].push_back(id);
    }
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    std::vector<Vertex> out;
    out.reserve(adj_[v].size());
    for (EdgeId e : adj_[v]) out.push_back(edge_other(e, v));
    return out;
}

Graph load_graph(std::istream& in) {
    int n, m;
    if (!(in >> n >> m)) throw std::invalid_argument("graph file: missing 'n m' header");
    std::vector<std::pair<Vertex, Vertex>> edges;
    edges.reserve(m);
    for (int i = 0; i < m; ++i) {
        Vertex u, v;
        if (!(in >> u >> v)) throw std::invalid_argument("graph file: truncated edge list");
        edges.emplace_back(u, v);
    }
    return Graph(n, edges);
}

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open graph file: " + path);
    return load_graph(in);
}

Subgraph induced_subgraph(const Graph& g, const std::vector<Vertex>& vertices) {
    Subgraph s;
    s.to_sub.assign(g.num_vertices() + 1, 0);
    s.from_sub.assign(vertices.size() + 1, 0);
    int k = 0;
    for (Vertex v : vertices) {
        s.to_sub[v] = ++k;
        s.from_sub[k] = v;
    }
    std::vector<std::pair<Vertex, Vertex>> edges;
    for (Vertex v : vertices) {
        for (EdgeId e : g.incident(v)) {
            Vertex u = g.edge_other(e, v);
            if (s.to_sub[u] && u < v)  // each edge once
                edges.emplace_back(s.to_sub[u], s.to_sub[v]);
        }
    }
    s.graph = Graph(k, edges);
    return s;
}

}  // namespace pardfs
