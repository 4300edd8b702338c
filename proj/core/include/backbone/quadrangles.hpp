#pragma once

#include <cstdint>
#include <vector>

#include "backbone/graph.hpp"

namespace backbone {

/// Number of simple 4-cycles through each edge / each node.
struct QuadrangleCounts {
    std::vector<std::uint64_t> per_edge;
    std::vector<std::uint64_t> per_node;
};

/// Exact quadrangle counts via length-2 path aggregation with node deletion,
/// processing nodes by descending degree. Single-threaded.
QuadrangleCounts count_quadrangles(const Graph& g);

}  // namespace backbone
