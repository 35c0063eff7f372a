#pragma once

#include <vector>

#include "pardfs/graph.hpp"
#include "pardfs/meter.hpp"

namespace pardfs {

// Component labeling of a vertex-induced subgraph. label[v] == 0 for
// removed vertices; surviving vertices get labels 1..num_components in
// order of their smallest member id.
struct CcLabeling {
    std::vector<int> label;  // index 1..n
    std::vector<int> sizes;  // index 0 unused, sizes[c] for component c

    int num_components() const { return static_cast<int>(sizes.size()) - 1; }
    int max_component_size() const;
    bool same_component(Vertex u, Vertex v) const { return label[u] != 0 && label[u] == label[v]; }
};

// Components of g minus `removed` (removed[v] true => v excluded).
CcLabeling connected_components(const Graph& g, const std::vector<bool>& removed,
                                WorkDepthMeter& meter = null_meter());
CcLabeling connected_components(const Graph& g, WorkDepthMeter& meter = null_meter());

// Member lists per component, each sorted ascending.
std::vector<std::vector<Vertex>> component_members(const CcLabeling& cc);

}  // namespace pardfs
