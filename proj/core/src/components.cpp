#include "backbone/components.hpp"

#include <algorithm>
#include <vector>

#include "backbone/errors.hpp"

namespace backbone {

Partition connected_components(const Graph& g) {
    const NodeId n = g.num_nodes();
    constexpr std::uint32_t kUnvisited = 0xffffffffu;
    std::vector<std::uint32_t> comp(n, kUnvisited);
    std::vector<NodeId> queue;
    std::uint32_t k = 0;
    for (NodeId s = 0; s < n; ++s) {
        if (comp[s] != kUnvisited) continue;
        comp[s] = k;
        queue.assign(1, s);
        while (!queue.empty()) {
            const NodeId v = queue.back();
            queue.pop_back();
            for (NodeId w : g.neighbors(v)) {
                if (comp[w] == kUnvisited) {
                    comp[w] = k;
                    queue.push_back(w);
                }
            }
        }
        ++k;
    }
    return Partition(comp);
}

NodeId largest_component_size(const Graph& g) {
    if (g.num_nodes() == 0) return 0;
    const auto sizes = connected_components(g).subset_sizes();
    return *std::max_element(sizes.begin(), sizes.end());
}

double largest_component_ratio(const Graph& sparse, const Graph& original) {
    if (sparse.num_nodes() != original.num_nodes())
        throw InvalidParameterError("graphs must share the node set");
    if (original.num_edges() == 0)
        throw UndefinedMeasureError("component ratio of an edgeless baseline");
    return static_cast<double>(largest_component_size(sparse)) /
           static_cast<double>(largest_component_size(original));
}

}  // namespace backbone
