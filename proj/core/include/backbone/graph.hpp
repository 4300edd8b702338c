#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "backbone/types.hpp"

namespace backbone {

struct CanonicalizeStats {
    std::size_t self_loops_removed = 0;
    std::size_t duplicates_merged = 0;
};

/// Immutable undirected graph in CSR form. Node ids are contiguous in
/// [0, n), neighbor lists are sorted ascending, and every undirected edge
/// {u, v} owns one canonical id in [0, m) shared by both directions.
/// Edge ids follow the lexicographic order of the canonical (u < v) pairs.
/// All accessors are safe for concurrent use once the graph is built.
class Graph {
public:
    Graph() = default;

    /// Builds a graph on `n` nodes from an arbitrary edge list. Endpoints
    /// must be < n. Self-loops are dropped and parallel edges merged; the
    /// counts land in `stats` when a sink is given.
    static Graph from_edges(NodeId n, const std::vector<std::pair<NodeId, NodeId>>& input,
                            CanonicalizeStats* stats = nullptr);

    NodeId num_nodes() const { return n_; }
    EdgeId num_edges() const { return m_; }

    NodeId degree(NodeId u) const {
        return static_cast<NodeId>(offsets_[u + 1] - offsets_[u]);
    }

    std::span<const NodeId> neighbors(NodeId u) const {
        return {adj_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
    }

    /// Canonical edge ids, positionally parallel to neighbors(u).
    std::span<const EdgeId> incident_edges(NodeId u) const {
        return {adj_edge_ids_.data() + offsets_[u], offsets_[u + 1] - offsets_[u]};
    }

    /// Canonical endpoints of edge `e`, first < second.
    std::pair<NodeId, NodeId> edge(EdgeId e) const { return edges_[e]; }

    /// Id of edge {u, v}, or kNoEdge if absent.
    EdgeId edge_id(NodeId u, NodeId v) const;

    bool has_edge(NodeId u, NodeId v) const { return edge_id(u, v) != kNoEdge; }

    /// Canonical (u < v) endpoint pairs indexed by edge id.
    const std::vector<std::pair<NodeId, NodeId>>& edges() const { return edges_; }

private:
    NodeId n_ = 0;
    EdgeId m_ = 0;
    std::vector<std::size_t> offsets_;
    std::vector<NodeId> adj_;
    std::vector<EdgeId> adj_edge_ids_;
    std::vector<std::pair<NodeId, NodeId>> edges_;
};

/// Total order on the nodes: ascending degree, ties broken by node id.
/// rank[v] is the position of v in that order.
struct NodeOrdering {
    std::vector<NodeId> rank;

    NodeId operator[](NodeId v) const { return rank[v]; }
};

NodeOrdering degree_ordering(const Graph& g);

/// Neighbors of u that rank strictly after u, ascending by node id.
std::vector<NodeId> forward_neighbors(const Graph& g, const NodeOrdering& ordering, NodeId u);

/// Copy with the same node set and exactly the edges with keep[e] == true,
/// re-canonicalized to fresh edge ids. `edge_map`, when given, receives
/// old id -> new id with kNoEdge for dropped edges.
Graph subgraph_by_mask(const Graph& g, const std::vector<bool>& keep,
                       std::vector<EdgeId>* edge_map = nullptr);

}  // namespace backbone
