#pragma once

#include <cstdint>

#include "backbone/graph.hpp"
#include "backbone/partition.hpp"

namespace backbone {

struct PlantedPartitionSpec {
    std::uint32_t communities = 1;
    std::uint32_t nodes_per_community = 1;
    double p_in = 0.5;   // intra-community edge probability
    double p_out = 0.0;  // inter-community edge probability, < p_in
    std::uint64_t seed = 1;
};

struct GeneratedGraph {
    Graph graph;
    Partition ground_truth;
    bool low_degree_warning = false;  // expected average degree < 1
};

/// Planted partition graph on communities * nodes_per_community nodes with
/// equal-sized blocks. Sparse regions are sampled with geometric skips, so
/// the cost is proportional to the number of edges drawn.
GeneratedGraph generate_planted_partition(const PlantedPartitionSpec& spec);

}  // namespace backbone
