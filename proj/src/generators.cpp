#include "pardfs/generators.hpp"

#include <cstdio>
#include <random>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

namespace pardfs {

namespace {

using EdgeVec = std::vector<std::pair<Vertex, Vertex>>;

std::uint64_t pack(Vertex a, Vertex b) {
    if (a > b) std::swap(a, b);
    return (static_cast<std::uint64_t>(a) << 32) | static_cast<std::uint64_t>(b);
}

Graph path_graph(int n) {
    EdgeVec es;
    for (Vertex v = 1; v < n; ++v) es.emplace_back(v, v + 1);
    return Graph(n, es);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("generate: a cycle needs n >= 3");
    EdgeVec es;
    for (Vertex v = 1; v < n; ++v) es.emplace_back(v, v + 1);
    es.emplace_back(n, 1);
    return Graph(n, es);
}

Graph grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw std::invalid_argument("generate: bad grid shape");
    auto id = [&](int r, int c) { return static_cast<Vertex>(r * cols + c + 1); };
    EdgeVec es;
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) es.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) es.emplace_back(id(r, c), id(r + 1, c));
        }
    return Graph(rows * cols, es);
}

Graph star_graph(int n) {
    EdgeVec es;
    for (Vertex v = 2; v <= n; ++v) es.emplace_back(1, v);
    return Graph(n, es);
}

Graph complete_graph(int n) {
    EdgeVec es;
    for (Vertex u = 1; u <= n; ++u)
        for (Vertex v = u + 1; v <= n; ++v) es.emplace_back(u, v);
    return Graph(n, es);
}

Graph lollipop_graph(int n) {
    if (n < 3) throw std::invalid_argument("generate: a lollipop needs n >= 3");
    int head = n / 2;
    EdgeVec es;
    for (Vertex u = 1; u <= head; ++u)
        for (Vertex v = u + 1; v <= head; ++v) es.emplace_back(u, v);
    for (Vertex v = head; v < n; ++v) es.emplace_back(v, v + 1);
    return Graph(n, es);
}

EdgeVec random_tree_edges(int n, std::mt19937_64& rng) {
    // random attachment over a random vertex ordering
    std::vector<Vertex> order(n);
    for (int i = 0; i < n; ++i) order[i] = static_cast<Vertex>(i + 1);
    for (int i = n - 1; i > 0; --i)
        std::swap(order[i], order[rng() % static_cast<std::uint64_t>(i + 1)]);
    EdgeVec es;
    for (int i = 1; i < n; ++i)
        es.emplace_back(order[rng() % static_cast<std::uint64_t>(i)], order[i]);
    return es;
}

Graph gnm_connected(int n, int m, std::mt19937_64& rng) {
    if (m < n - 1) throw std::invalid_argument("generate: too few edges to be connected");
    long long cap = static_cast<long long>(n) * (n - 1) / 2;
    if (m > cap) throw std::invalid_argument("generate: too many edges for a simple graph");
    EdgeVec es = random_tree_edges(n, rng);
    std::unordered_set<std::uint64_t> seen;
    for (auto [u, v] : es) seen.insert(pack(u, v));
    while (static_cast<int>(es.size()) < m) {
        Vertex u = static_cast<Vertex>(1 + rng() % static_cast<std::uint64_t>(n));
        Vertex v = static_cast<Vertex>(1 + rng() % static_cast<std::uint64_t>(n));
        if (u == v || !seen.insert(pack(u, v)).second) continue;
        es.emplace_back(u, v);
    }
    return Graph(n, es);
}

}  // namespace

Graph generate(const std::string& kind, int n, int m, const std::string& params,
               std::uint64_t seed) {
    if (n < 1 && params.empty()) throw std::invalid_argument("generate: n must be positive");
    std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + 0x2545f4914f6cdd1dULL);
    if (kind == "path") return path_graph(n);
    if (kind == "cycle") return cycle_graph(n);
    if (kind == "grid") {
        int rows = 0, cols = 0;
        if (!params.empty()) {
            if (std::sscanf(params.c_str(), "%dx%d", &rows, &cols) != 2)
                throw std::invalid_argument("generate: grid params must look like RxC");
        } else {
            rows = 1;
            while ((rows + 1) * (rows + 1) <= n) ++rows;
            cols = (n + rows - 1) / rows;
        }
        return grid_graph(rows, cols);
    }
    if (kind == "star") return star_graph(n);
    if (kind == "complete") return complete_graph(n);
    if (kind == "lollipop") return lollipop_graph(n);
    if (kind == "random-tree") return Graph(n, random_tree_edges(n, rng));
    if (kind == "random-gnm-connected") return gnm_connected(n, m, rng);
    throw std::invalid_argument("generate: unknown kind '" + kind + "'");
}

}  // namespace pardfs
