#include "backbone/quadrangles.hpp"

#include <algorithm>
#include <vector>

namespace backbone {

// Length-2 path aggregation with node deletion. Every 4-cycle is counted in
// the iteration of its first-processed node: the two paths to the opposite
// corner meet in the same bucket and each bucket of size t contributes t-1
// cycles to every edge it contains. Later iterations cannot see the cycle
// again because its first corner is already deleted.
QuadrangleCounts count_quadrangles(const Graph& g) {
    const NodeId n = g.num_nodes();
    QuadrangleCounts qc;
    qc.per_edge.assign(g.num_edges(), 0);
    qc.per_node.assign(n, 0);
    if (n == 0 || g.num_edges() == 0) return qc;

    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) > g.degree(b);
        return a < b;
    });

    std::vector<bool> deleted(n, false);
    std::vector<std::vector<std::pair<EdgeId, EdgeId>>> bucket(n);
    std::vector<NodeId> touched;

    for (NodeId u : order) {
        const auto nbrs = g.neighbors(u);
        const auto eids = g.incident_edges(u);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            const NodeId v = nbrs[i];
            if (deleted[v]) continue;
            const auto vn = g.neighbors(v);
            const auto ve = g.incident_edges(v);
            for (std::size_t j = 0; j < vn.size(); ++j) {
                const NodeId w = vn[j];
                if (w == u || deleted[w]) continue;
                if (bucket[w].empty()) touched.push_back(w);
                bucket[w].emplace_back(eids[i], ve[j]);
            }
        }
        for (NodeId w : touched) {
            const std::size_t t = bucket[w].size();
            if (t >= 2) {
                for (auto [e_uv, e_vw] : bucket[w]) {
                    qc.per_edge[e_uv] += t - 1;
                    qc.per_edge[e_vw] += t - 1;
                }
            }
            bucket[w].clear();
        }
        touched.clear();
        deleted[u] = true;
    }

    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        qc.per_node[u] += qc.per_edge[e];
        qc.per_node[v] += qc.per_edge[e];
    }
    // Each cycle through a node covers two of its incident edges.
    for (auto& q : qc.per_node) q /= 2;
    return qc;
}

}  // namespace backbone
