#include "backbone/triangles.hpp"

#include <vector>

#include "backbone/parallel.hpp"

namespace backbone {

// Node-iterator triangle counting over the degree ordering. For every node
// u, the neighborhood is marked with the connecting edge id; triangles then
// show up as marked nodes w reached over a neighbor v's forward list. Each
// per-edge counter is written only while iterating the higher-ranked
// endpoint of that edge, so no two iterations touch the same counter and
// the counts are exact for any worker count and schedule.
TriangleCounts count_triangles(const Graph& g, int workers) {
    const NodeId n = g.num_nodes();
    TriangleCounts tc;
    tc.per_edge.assign(g.num_edges(), 0);
    if (n == 0 || g.num_edges() == 0) return tc;

    const NodeOrdering ordering = degree_ordering(g);

    // Forward adjacency: neighbors ranked after the node, CSR layout.
    std::vector<std::size_t> fwd_offsets(static_cast<std::size_t>(n) + 1, 0);
    for (NodeId v = 0; v < n; ++v) {
        std::size_t cnt = 0;
        for (NodeId w : g.neighbors(v))
            if (ordering.rank[w] > ordering.rank[v]) ++cnt;
        fwd_offsets[v + 1] = fwd_offsets[v] + cnt;
    }
    std::vector<NodeId> fwd(fwd_offsets[n]);
    for (NodeId v = 0; v < n; ++v) {
        std::size_t at = fwd_offsets[v];
        for (NodeId w : g.neighbors(v))
            if (ordering.rank[w] > ordering.rank[v]) fwd[at++] = w;
    }

    auto* counts = tc.per_edge.data();
    const int threads = resolve_workers(workers);
#pragma omp parallel num_threads(threads)
    {
        std::vector<EdgeId> mark(n, kNoEdge);  // mark[w] = id of edge {u, w}
#pragma omp for schedule(dynamic, 64)
        for (std::int64_t ui = 0; ui < static_cast<std::int64_t>(n); ++ui) {
            const NodeId u = static_cast<NodeId>(ui);
            const auto nbrs = g.neighbors(u);
            const auto eids = g.incident_edges(u);
            for (std::size_t i = 0; i < nbrs.size(); ++i) mark[nbrs[i]] = eids[i];
            const NodeId rank_u = ordering.rank[u];
            for (std::size_t i = 0; i < nbrs.size(); ++i) {
                const NodeId v = nbrs[i];
                for (std::size_t j = fwd_offsets[v]; j < fwd_offsets[v + 1]; ++j) {
                    const NodeId w = fwd[j];
                    const EdgeId uw = mark[w];
                    if (uw == kNoEdge) continue;
                    // Triangle u, v, w with rank(w) > rank(v).
                    if (rank_u > ordering.rank[v]) ++counts[eids[i]];
                    if (rank_u > ordering.rank[w]) ++counts[uw];
                }
            }
            for (NodeId v : nbrs) mark[v] = kNoEdge;
        }
    }
    return tc;
}

std::vector<std::uint64_t> triangles_per_node(const Graph& g, const TriangleCounts& tc) {
    std::vector<std::uint64_t> per_node(g.num_nodes(), 0);
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
        auto [u, v] = g.edge(e);
        per_node[u] += tc.per_edge[e];
        per_node[v] += tc.per_edge[e];
    }
    // Each triangle at a node was counted once per incident triangle edge.
    for (auto& t : per_node) t /= 2;
    return per_node;
}

}  // namespace backbone
