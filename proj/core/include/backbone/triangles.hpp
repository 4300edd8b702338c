#pragma once

#include <cstdint>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

/// Number of triangles each edge participates in, indexed by edge id.
struct TriangleCounts {
    std::vector<std::uint32_t> per_edge;
};

/// Exact per-edge triangle counts. Parallel over nodes; every counter is
/// written only from the iteration of its higher-ranked endpoint, so the
/// result is identical for any worker count. workers == 0 uses the library
/// default.
TriangleCounts count_triangles(const Graph& g, int workers = 0);

/// Triangles per node, derived from the per-edge counts.
std::vector<std::uint64_t> triangles_per_node(const Graph& g, const TriangleCounts& tc);

}  // namespace backbone
