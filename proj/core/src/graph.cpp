#include "backbone/graph.hpp"

#include <algorithm>
#include <cassert>

#include "backbone/errors.hpp"

namespace backbone {

Graph Graph::from_edges(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& input,
                        CanonicalizeStats* stats) {
    std::vector<std::pair<NodeId, NodeId>> edges;
    edges.reserve(input.size());
    std::size_t loops = 0;
    for (auto [u, v] : input) {
        if (u >= n || v >= n)
            throw InvalidParameterError("edge endpoint out of range");
        if (u == v) {
            ++loops;
            continue;
        }
        edges.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(edges.begin(), edges.end());
    auto last = std::unique(edges.begin(), edges.end());
    std::size_t dupes = static_cast<std::size_t>(edges.end() - last);
    edges.erase(last, edges.end());
    if (stats) {
        stats->self_loops_removed = loops;
        stats->duplicates_merged = dupes;
    }

    Graph g;
    g.n_ = n;
    g.m_ = static_cast<EdgeId>(edges.size());
    g.edges_ = std::move(edges);

    g.offsets_.assign(static_cast<std::size_t>(n) + 1, 0);
    for (auto [u, v] : g.edges_) {
        ++g.offsets_[u + 1];
        ++g.offsets_[v + 1];
    }
    for (std::size_t i = 1; i <= n; ++i) g.offsets_[i] += g.offsets_[i - 1];

    g.adj_.resize(2 * static_cast<std::size_t>(g.m_));
    g.adj_edge_ids_.resize(g.adj_.size());
    std::vector<std::size_t> cursor(g.offsets_.begin(), g.offsets_.end() - 1);
    for (EdgeId e = 0; e < g.m_; ++e) {
        auto [u, v] = g.edges_[e];
        g.adj_[cursor[u]] = v;
        g.adj_edge_ids_[cursor[u]++] = e;
        g.adj_[cursor[v]] = u;
        g.adj_edge_ids_[cursor[v]++] = e;
    }
    // The fill above interleaves lower and higher neighbors, so restore
    // ascending order per node with the edge ids kept parallel.
    std::vector<std::pair<NodeId, EdgeId>> slot;
    for (NodeId u = 0; u < n; ++u) {
        auto begin = g.offsets_[u];
        auto end = g.offsets_[u + 1];
        slot.resize(end - begin);
        for (std::size_t i = begin; i < end; ++i)
            slot[i - begin] = {g.adj_[i], g.adj_edge_ids_[i]};
        std::sort(slot.begin(), slot.end());
        for (std::size_t i = begin; i < end; ++i) {
            g.adj_[i] = slot[i - begin].first;
            g.adj_edge_ids_[i] = slot[i - begin].second;
        }
    }
    return g;
}

EdgeId Graph::edge_id(NodeId u, NodeId v) const {
    if (u == v) return kNoEdge;
    if (degree(u) > degree(v)) std::swap(u, v);
    auto nb = neighbors(u);
    auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return kNoEdge;
    return incident_edges(u)[static_cast<std::size_t>(it - nb.begin())];
}

NodeOrdering degree_ordering(const Graph& g) {
    const NodeId n = g.num_nodes();
    std::vector<NodeId> order(n);
    for (NodeId v = 0; v < n; ++v) order[v] = v;
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (g.degree(a) != g.degree(b)) return g.degree(a) < g.degree(b);
        return a < b;
    });
    NodeOrdering ordering;
    ordering.rank.resize(n);
    for (NodeId i = 0; i < n; ++i) ordering.rank[order[i]] = i;
    return ordering;
}

std::vector<NodeId> forward_neighbors(const Graph& g, const NodeOrdering& ordering, NodeId u) {
    std::vector<NodeId> out;
    for (NodeId v : g.neighbors(u))
        if (ordering.rank[v] > ordering.rank[u]) out.push_back(v);
    return out;
}

Graph subgraph_by_mask(const Graph& g, const std::vector<bool>& keep,
                       std::vector<EdgeId>* edge_map) {
    assert(keep.size() == g.num_edges());
    std::vector<std::pair<NodeId, NodeId>> kept;
    for (EdgeId e = 0; e < g.num_edges(); ++e)
        if (keep[e]) kept.push_back(g.edge(e));
    Graph sub = Graph::from_edges(g.num_nodes(), kept);
    if (edge_map) {
        edge_map->assign(g.num_edges(), kNoEdge);
        // Kept edges preserve their canonical order, so new ids are the
        // running count of kept edges.
        EdgeId next = 0;
        for (EdgeId e = 0; e < g.num_edges(); ++e)
            if (keep[e]) (*edge_map)[e] = next++;
    }
    return sub;
}

}  // namespace backbone
