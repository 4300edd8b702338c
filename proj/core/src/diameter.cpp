#include "backbone/diameter.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "backbone/components.hpp"
#include "backbone/errors.hpp"

namespace backbone {

namespace {

constexpr std::uint32_t kInf = std::numeric_limits<std::uint32_t>::max();

// BFS distances from s; untouched nodes stay at kInf. Returns the
// eccentricity of s within its component.
std::uint32_t bfs(const Graph& g, NodeId s, std::vector<std::uint32_t>& dist,
                  std::vector<NodeId>& queue) {
    std::fill(dist.begin(), dist.end(), kInf);
    dist[s] = 0;
    queue.assign(1, s);
    std::size_t head = 0;
    std::uint32_t ecc = 0;
    while (head < queue.size()) {
        const NodeId v = queue[head++];
        for (NodeId w : g.neighbors(v)) {
            if (dist[w] == kInf) {
                dist[w] = dist[v] + 1;
                ecc = std::max(ecc, dist[w]);
                queue.push_back(w);
            }
        }
    }
    return ecc;
}

}  // namespace

// Bound tightening on the largest component: every finished BFS from s
// yields ecc(s) as a lower bound and dist(s, v) + ecc(s) as an upper bound
// on ecc(v). Nodes whose upper bound sinks to the lower bound are settled;
// the next BFS starts from the node with the largest open upper bound.
std::uint32_t exact_diameter(const Graph& g) {
    if (g.num_edges() == 0)
        throw UndefinedMeasureError("diameter of an edgeless graph");

    const Partition comps = connected_components(g);
    const auto sizes = comps.subset_sizes();
    const std::uint32_t lcc =
        static_cast<std::uint32_t>(std::max_element(sizes.begin(), sizes.end()) - sizes.begin());

    const NodeId n = g.num_nodes();
    std::vector<NodeId> members;
    for (NodeId v = 0; v < n; ++v)
        if (comps[v] == lcc) members.push_back(v);

    std::vector<std::uint32_t> dist(n), upper(n, kInf);
    std::vector<NodeId> queue;
    queue.reserve(members.size());

    // Start at a max-degree member; hubs tend to have small eccentricity
    // and tighten the upper bounds fast.
    NodeId start = members[0];
    for (NodeId v : members)
        if (g.degree(v) > g.degree(start)) start = v;

    std::uint32_t lower = 0;
    NodeId source = start;
    while (true) {
        const std::uint32_t ecc = bfs(g, source, dist, queue);
        lower = std::max(lower, ecc);
        NodeId next = kNoNode;
        std::uint32_t next_upper = 0;
        for (NodeId v : members) {
            upper[v] = std::min(upper[v], dist[v] + ecc);
            if (upper[v] > lower && upper[v] > next_upper) {
                next_upper = upper[v];
                next = v;
            }
        }
        if (next == kNoNode) return lower;
        source = next;
    }
}

double diameter_quotient(const Graph& sparse, const Graph& original) {
    if (sparse.num_nodes() != original.num_nodes())
        throw InvalidParameterError("graphs must share the node set");
    return static_cast<double>(exact_diameter(original)) /
           static_cast<double>(exact_diameter(sparse));
}

}  // namespace backbone
